#pragma once

#include "filiform/rational.hpp"

#include <utility>
#include <vector>

namespace filiform {

/// Coordinate vector of fixed dimension over the rationals. Coordinates are
/// addressed 1-based, matching the basis labels e1..en / x1..xn everywhere in
/// the library. Mixing dimensions in arithmetic throws std::invalid_argument.
class Vec {
public:
  explicit Vec(int dim);

  /// Unit vector with 1 in coordinate i (1-based).
  static Vec unit(int dim, int i);

  int dim() const { return static_cast<int>(c_.size()); }

  const Rational& coord(int i) const;
  void set_coord(int i, Rational value);

  bool is_zero() const;

  /// Nonzero coordinates as (index, value), index ascending.
  std::vector<std::pair<int, Rational>> nonzero() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Rational& s);
  /// this += s * o
  Vec& add_scaled(const Rational& s, const Vec& o);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const Rational& s, Vec v) { return v *= s; }
  friend Vec operator-(Vec a);

  friend bool operator==(const Vec& a, const Vec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vec& a, const Vec& b) { return a.c_ != b.c_; }

private:
  std::vector<Rational> c_;
};

}  // namespace filiform
