#pragma once

#include "filiform/structure_table.hpp"

#include <string>

namespace filiform {

/// The four filiform families. Minimum dimensions are L:3, Q:4 (even), R:5, W:5 —
/// the smallest values for which every index range in the defining brackets is
/// non-empty and consistent.
enum class Family { L, Q, R, W };

struct FamilyId {
  Family tag{};
  int dim = 0;
};

std::string family_name(Family family);
Family family_from_string(const std::string& text);  // throws std::invalid_argument

/// Throws std::invalid_argument (with the reason) for unsupported dimensions.
void require_valid_dim(Family family, int dim);

/// [e1,ei] = -[ei,e1] = e_{i+1} for 2 <= i <= n-1.
StructureTable build_L(int n);

/// n = 2s even: the chain [e1,ei] = e_{i+1} for 2 <= i <= 2s-2, plus the pairing
/// [e_{2s+1-i}, e_i] = (-1)^i e_{2s} for 2 <= i <= s. Both orientations of every
/// bracket are stored explicitly so the identical machinery serves
/// non-antisymmetric tables.
StructureTable build_Q(int n);

/// Chain [e1,ei] = e_{i+1} for 2 <= i <= n-1 and [e2,ei] = e_{i+2} for
/// 3 <= i <= n-2.
StructureTable build_R(int n);

/// Truncated Witt algebra: [ei,ej] = (j-i) e_{i+j} whenever i+j <= n.
StructureTable build_W(int n);

StructureTable build(FamilyId id);

}  // namespace filiform
