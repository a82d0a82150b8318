#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace filiform {

/// Arbitrary-precision integer. Factorial denominators and the cascaded
/// products in the Witt coefficient system overflow fixed-width types
/// almost immediately, so everything scalar is built on this.
using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar: always in lowest terms, denominator > 0.
/// All arithmetic is exact; there is no floating-point mode anywhere.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(BigInt n) : v_(std::move(n)) {}

  /// num/den, reduced. Throws std::domain_error when den == 0.
  Rational(BigInt num, BigInt den);
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses the canonical string form "p/q" or "p" (q > 0 after reduction).
  /// Throws std::invalid_argument on malformed input or zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return numerator(v_); }
  BigInt den() const { return denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// Canonical serialization: "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  /// Throws std::domain_error on zero.
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) { a.v_ = -a.v_; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  boost::multiprecision::cpp_rational v_;
};

/// Exact binomial coefficient C(m, k) by the multiplicative formula; 0 for k > m.
BigInt binomial(int m, int k);

/// Exact m! as a big integer.
BigInt factorial(int m);

}  // namespace filiform
