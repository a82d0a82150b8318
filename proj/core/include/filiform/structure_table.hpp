#pragma once

#include "filiform/matrix.hpp"
#include "filiform/vec.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace filiform {

/// A dimension-n algebra given by the brackets of its basis pairs. Only nonzero
/// brackets are stored; looking up an absent pair yields the zero vector, since
/// every table in scope leaves "the remaining products" at zero. Bilinear
/// extension to arbitrary elements is eval().
///
/// Tables are plain values: build one with set_bracket(), then treat it as
/// immutable. All member functions are const-safe to share across threads.
class StructureTable {
public:
  StructureTable(int dim, std::vector<std::string> basis, std::string name = {});

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }

  /// [b_i, b_j]; zero vector when the pair is absent. 1-based.
  Vec bracket(int i, int j) const;
  void set_bracket(int i, int j, const Vec& value);

  /// Bilinear extension of the table to arbitrary elements.
  Vec eval(const Vec& u, const Vec& v) const;

  /// Nonzero brackets, ordered by (i, j).
  const std::map<std::pair<int, int>, Vec>& entries() const { return brackets_; }

  /// Structural equality: dimension, basis labels, brackets. The name tag is
  /// metadata and does not participate.
  friend bool operator==(const StructureTable& a, const StructureTable& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_ && a.brackets_ == b.brackets_;
  }
  friend bool operator!=(const StructureTable& a, const StructureTable& b) { return !(a == b); }

private:
  int dim_;
  std::vector<std::string> basis_;
  std::string name_;
  std::map<std::pair<int, int>, Vec> brackets_;

  void check_index(int i) const;
};

/// "e1", ..., "en".
std::vector<std::string> standard_basis_labels(int dim);

/// "e1", ..., "em", "x1", ..., "xk" — the basis of an extension of an
/// m-dimensional algebra by a k-dimensional module.
std::vector<std::string> extension_basis_labels(int lie_dim, int module_dim);

/// The same algebra written in the basis whose j-th element is column j of p
/// (in old coordinates). Throws std::invalid_argument when p is singular or of
/// the wrong size. Basis labels are carried over unchanged.
StructureTable change_basis(const StructureTable& table, const Matrix& p);

}  // namespace filiform
