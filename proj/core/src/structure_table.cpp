#include "filiform/structure_table.hpp"

#include <stdexcept>

namespace filiform {

StructureTable::StructureTable(int dim, std::vector<std::string> basis, std::string name)
    : dim_(dim), basis_(std::move(basis)), name_(std::move(name)) {
  if (dim < 1) throw std::invalid_argument("StructureTable: dimension must be positive");
  if (static_cast<int>(basis_.size()) != dim)
    throw std::invalid_argument("StructureTable: basis label count must equal dim");
}

void StructureTable::check_index(int i) const {
  if (i < 1 || i > dim_) throw std::out_of_range("StructureTable: basis index out of range");
}

Vec StructureTable::bracket(int i, int j) const {
  check_index(i);
  check_index(j);
  auto it = brackets_.find({i, j});
  if (it == brackets_.end()) return Vec(dim_);
  return it->second;
}

void StructureTable::set_bracket(int i, int j, const Vec& value) {
  check_index(i);
  check_index(j);
  if (value.dim() != dim_) throw std::invalid_argument("StructureTable: bracket value dimension mismatch");
  if (value.is_zero())
    brackets_.erase({i, j});
  else
    brackets_.insert_or_assign(std::make_pair(i, j), value);
}

Vec StructureTable::eval(const Vec& u, const Vec& v) const {
  if (u.dim() != dim_ || v.dim() != dim_)
    throw std::invalid_argument("StructureTable: eval dimension mismatch");
  Vec out(dim_);
  for (const auto& [i, ci] : u.nonzero())
    for (const auto& [j, cj] : v.nonzero()) {
      auto it = brackets_.find({i, j});
      if (it != brackets_.end()) out.add_scaled(ci * cj, it->second);
    }
  return out;
}

std::vector<std::string> standard_basis_labels(int dim) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(dim));
  for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

std::vector<std::string> extension_basis_labels(int lie_dim, int module_dim) {
  std::vector<std::string> labels = standard_basis_labels(lie_dim);
  for (int i = 1; i <= module_dim; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

StructureTable change_basis(const StructureTable& table, const Matrix& p) {
  const int n = table.dim();
  if (p.size() != n) throw std::invalid_argument("change_basis: matrix size mismatch");
  auto p_inv = inverse(p);
  if (!p_inv) throw std::invalid_argument("change_basis: singular basis-change matrix");

  auto column = [&](int j) {
    Vec v(n);
    for (int r = 1; r <= n; ++r)
      if (!p.at(r, j).is_zero()) v.set_coord(r, p.at(r, j));
    return v;
  };
  auto to_new_coords = [&](const Vec& old) {
    Vec v(n);
    for (int r = 1; r <= n; ++r) {
      Rational acc = 0;
      for (const auto& [c, val] : old.nonzero()) acc += p_inv->at(r, c) * val;
      if (!acc.is_zero()) v.set_coord(r, acc);
    }
    return v;
  };

  StructureTable out(n, table.basis(), table.name());
  std::vector<Vec> new_basis_vectors;
  new_basis_vectors.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) new_basis_vectors.push_back(column(j));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Vec value = table.eval(new_basis_vectors[static_cast<std::size_t>(i - 1)],
                             new_basis_vectors[static_cast<std::size_t>(j - 1)]);
      if (!value.is_zero()) out.set_bracket(i, j, to_new_coords(value));
    }
  return out;
}

}  // namespace filiform
