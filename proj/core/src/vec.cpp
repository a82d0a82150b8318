#include "filiform/vec.hpp"

#include <stdexcept>

namespace filiform {

namespace {
void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Vec: dimension mismatch");
}
}  // namespace

Vec::Vec(int dim) {
  if (dim < 1) throw std::invalid_argument("Vec: dimension must be positive");
  c_.resize(static_cast<std::size_t>(dim));
}

Vec Vec::unit(int dim, int i) {
  Vec v(dim);
  v.set_coord(i, 1);
  return v;
}

const Rational& Vec::coord(int i) const {
  if (i < 1 || i > dim()) throw std::out_of_range("Vec: coordinate index out of range");
  return c_[static_cast<std::size_t>(i - 1)];
}

void Vec::set_coord(int i, Rational value) {
  if (i < 1 || i > dim()) throw std::out_of_range("Vec: coordinate index out of range");
  c_[static_cast<std::size_t>(i - 1)] = std::move(value);
}

bool Vec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::pair<int, Rational>> Vec::nonzero() const {
  std::vector<std::pair<int, Rational>> out;
  for (int i = 0; i < dim(); ++i)
    if (!c_[static_cast<std::size_t>(i)].is_zero()) out.emplace_back(i + 1, c_[static_cast<std::size_t>(i)]);
  return out;
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vec& Vec::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vec& Vec::add_scaled(const Rational& s, const Vec& o) {
  require_same_dim(*this, o);
  if (s.is_zero()) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!o.c_[i].is_zero()) c_[i] += s * o.c_[i];
  return *this;
}

Vec operator-(Vec a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

}  // namespace filiform
