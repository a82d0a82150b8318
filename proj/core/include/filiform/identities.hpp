#pragma once

#include "filiform/structure_table.hpp"
#include "filiform/vec.hpp"

#include <string>
#include <vector>

namespace filiform {

enum class Law { antisymmetry, jacobi, leibniz };

std::string law_name(Law law);

/// A basis pair/triple where a law fails, together with the nonzero residual.
/// For pair laws (antisymmetry) k is 0.
struct Violation {
  int i = 0;
  int j = 0;
  int k = 0;
  Vec residual;
};

struct IdentityReport {
  Law law{};
  long checked = 0;
  std::vector<Violation> violations;  // sorted by (i, j, k)
  bool ok() const { return violations.empty(); }
};

/// Residual [e_i,e_j] + [e_j,e_i] over all ordered basis pairs.
IdentityReport check_antisymmetry(const StructureTable& table);

/// Cyclic residual [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] over all
/// basis triples. By trilinearity, a clean report proves the law on the whole
/// algebra.
IdentityReport check_jacobi(const StructureTable& table);

/// Right Leibniz identity, the convention used throughout this library:
///     [[x,y],z] = [[x,z],y] + [x,[y,z]].
/// The residual reported is [[e_i,e_j],e_k] - [[e_i,e_k],e_j] - [e_i,[e_j,e_k]].
IdentityReport check_leibniz(const StructureTable& table);

/// Dimensions of the characteristic subspaces used as isomorphism invariants.
///   lower_central_dims:  dim L^1, dim L^2, ... with L^{k+1} = [L, L^k],
///                        iterated until the dimension stabilizes (0 for
///                        nilpotent algebras); always non-increasing.
///   derived_dims:        same for L^(k+1) = [L^(k), L^(k)].
///   center_dim:          { z : [z,x] = [x,z] = 0 for all x }.
///   left_annihilator:    { z : [z,x] = 0 for all x };
///   right_annihilator:   { z : [x,z] = 0 for all x }. These differ for Leibniz
///                        algebras and separate better than the center alone.
///   squares_ideal_dim:   see squares_ideal().
struct SeriesProfile {
  std::vector<int> lower_central_dims;
  std::vector<int> derived_dims;
  int center_dim = 0;
  int left_annihilator_dim = 0;
  int right_annihilator_dim = 0;
  int squares_ideal_dim = 0;
};

SeriesProfile series_profile(const StructureTable& table);

/// dim L^i == n - i for all 2 <= i <= n.
bool is_filiform(const StructureTable& table);

/// Basis (reduced echelon form) of the ideal generated by the squares [x,x].
/// Generators are the symmetrized basis brackets [e_i,e_j] + [e_j,e_i] — over a
/// field of characteristic 0 these span the same space as all squares — closed
/// under right bracketing by basis elements until the rank stabilizes.
std::vector<Vec> squares_ideal(const StructureTable& table);

}  // namespace filiform
