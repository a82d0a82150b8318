#include "filiform/catalog.hpp"

#include <stdexcept>

namespace filiform {

std::string family_name(Family family) {
  switch (family) {
    case Family::L: return "L";
    case Family::Q: return "Q";
    case Family::R: return "R";
    case Family::W: return "W";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_string(const std::string& text) {
  if (text == "L") return Family::L;
  if (text == "Q") return Family::Q;
  if (text == "R") return Family::R;
  if (text == "W") return Family::W;
  throw std::invalid_argument("unknown family '" + text + "' (expected L, Q, R or W)");
}

void require_valid_dim(Family family, int dim) {
  switch (family) {
    case Family::L:
      if (dim < 3) throw std::invalid_argument("L requires dimension >= 3");
      return;
    case Family::Q:
      if (dim % 2 != 0) throw std::invalid_argument("Q requires even dimension");
      if (dim < 4) throw std::invalid_argument("Q requires even dimension >= 4");
      return;
    case Family::R:
      if (dim < 5) throw std::invalid_argument("R requires dimension >= 5");
      return;
    case Family::W:
      if (dim < 5) throw std::invalid_argument("W requires dimension >= 5");
      return;
  }
  throw std::invalid_argument("unknown family");
}

namespace {
StructureTable fresh(Family family, int n) {
  return {n, standard_basis_labels(n), family_name(family) + std::to_string(n)};
}

void set_pair(StructureTable& t, int i, int j, int target, const Rational& coeff) {
  t.set_bracket(i, j, coeff * Vec::unit(t.dim(), target));
  t.set_bracket(j, i, -coeff * Vec::unit(t.dim(), target));
}
}  // namespace

StructureTable build_L(int n) {
  require_valid_dim(Family::L, n);
  StructureTable t = fresh(Family::L, n);
  for (int i = 2; i <= n - 1; ++i) set_pair(t, 1, i, i + 1, 1);
  return t;
}

StructureTable build_Q(int n) {
  require_valid_dim(Family::Q, n);
  const int s = n / 2;
  StructureTable t = fresh(Family::Q, n);
  for (int i = 2; i <= 2 * s - 2; ++i) set_pair(t, 1, i, i + 1, 1);
  for (int i = 2; i <= s; ++i) set_pair(t, 2 * s + 1 - i, i, 2 * s, (i % 2 == 0) ? 1 : -1);
  return t;
}

StructureTable build_R(int n) {
  require_valid_dim(Family::R, n);
  StructureTable t = fresh(Family::R, n);
  for (int i = 2; i <= n - 1; ++i) set_pair(t, 1, i, i + 1, 1);
  for (int i = 3; i <= n - 2; ++i) set_pair(t, 2, i, i + 2, 1);
  return t;
}

StructureTable build_W(int n) {
  require_valid_dim(Family::W, n);
  StructureTable t = fresh(Family::W, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (i + j <= n) set_pair(t, i, j, i + j, j - i);
  return t;
}

StructureTable build(FamilyId id) {
  switch (id.tag) {
    case Family::L: return build_L(id.dim);
    case Family::Q: return build_Q(id.dim);
    case Family::R: return build_R(id.dim);
    case Family::W: return build_W(id.dim);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace filiform
