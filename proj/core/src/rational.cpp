#include "filiform/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace filiform {

Rational::Rational(BigInt num, BigInt den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  v_.assign(boost::multiprecision::cpp_rational(std::move(num), std::move(den)));
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> BigInt {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("Rational::parse: lone sign");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational::parse: bad character in '" + std::string(s) + "'");
    return BigInt(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den.is_zero()) throw std::invalid_argument("Rational::parse: zero denominator");
  return {std::move(num), std::move(den)};
}

std::string Rational::str() const {
  const BigInt d = den();
  std::string out = num().str();
  if (d != 1) {
    out += '/';
    out += d.str();
  }
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational out;
  out.v_ = 1 / v_;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(int m, int k) {
  if (k < 0 || k > m) return 0;
  if (k > m - k) k = m - k;
  BigInt out = 1;
  for (int t = 1; t <= k; ++t) {
    out *= (m - k + t);
    out /= t;  // exact at every step: the partial product is C(m-k+t, t)
  }
  return out;
}

BigInt factorial(int m) {
  BigInt out = 1;
  for (int t = 2; t <= m; ++t) out *= t;
  return out;
}

}  // namespace filiform
