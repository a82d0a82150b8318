#pragma once

#include "filiform/catalog.hpp"
#include "filiform/identities.hpp"
#include "filiform/matrix.hpp"

#include <utility>
#include <vector>

namespace filiform {

/// Assignment basis element -> strictly upper-triangular matrix. The matrix size
/// equals the algebra dimension; together with faithfulness this is the
/// minimality certificate: a faithful strictly-upper-triangular representation
/// of an n-dimensional filiform Lie algebra cannot be smaller than n x n.
struct MatrixRep {
  FamilyId algebra;
  int dim = 0;                 // matrix size == algebra dimension
  std::vector<Matrix> images;  // images[i-1] represents e_i

  const Matrix& image(int i) const;  // 1-based
};

/// phi for Q_{2n}:  phi(e1) = sum_{k=2}^{2n-2} E_{k,k+1},
/// phi(e_i) = (-1)^i E_{1,i} + E_{2n-i+1,2n} for 2 <= i <= 2n-1,
/// phi(e_{2n}) = -2 E_{1,2n}.
MatrixRep build_rep_Q(int n2);

/// psi for R_n:  psi(e1) = sum_{i=1}^{n-2} E_{i,i+1},
/// psi(e2) = sum_{i=1}^{n-3} E_{i,i+2} + E_{n-1,n},
/// psi(e_i) = E_{n+1-i,n} for 3 <= i <= n.
MatrixRep build_rep_R(int n);

/// phi for W_n, closed form:
///   phi(e1) = sum_{k=1}^{n-2} E_{k,k+1},
///   phi(e2) = sum_{k=1}^{n-3} 1/(n-k) E_{k,k+2} + E_{n-1,n},
///   phi(e_i) = 1/(i-2)! ( sum_{k=1}^{n-i-1}
///                (sum_{s=0}^{i-2} (-1)^{i+s} C(i-2,s)/(n-k-s)) E_{k,k+i}
///              + E_{n+1-i,n} )            for 3 <= i <= n.
MatrixRep build_rep_W(int n);

/// Same representation built by the bracket recursion
/// phi(e_{k+1}) = 1/(k-1) [phi(e1), phi(e_k)] instead of the closed form.
/// Kept as an independent construction route; the two must agree entrywise,
/// which catches transcription slips in either.
MatrixRep build_rep_W_recursive(int n);

/// Dispatcher. Family L is rejected: no L_n builder ships here, its minimal
/// representation belongs to prior work on the naturally graded case.
MatrixRep build_rep(FamilyId id);

/// All basis pairs (i, j): commutator(images[i], images[j]) must equal the image
/// of [e_i, e_j]. Violations carry the pair (k unused) and the residual as the
/// vectorized matrix difference.
IdentityReport verify_homomorphism(const StructureTable& table, const MatrixRep& rep);

/// rank of the vectorized images == number of basis elements.
bool verify_faithful(const MatrixRep& rep);

/// Both sides of  sum_{k=0}^{m} (-1)^k C(m,k)/(x+k)  =  m! / (x(x+1)...(x+m)),
/// evaluated exactly. Throws std::domain_error when x hits a pole
/// (x in {0,-1,...,-m}).
std::pair<Rational, Rational> binomial_sum_identity(int m, const Rational& x);

/// The Witt representation coefficient alpha_i = 1/(n-i), 1 <= i <= n-3.
Rational witt_coefficient(int n, int i);

/// One failing instance of the Witt coefficient system: interior instances are
/// identified by (i, j, p), the last-column instances by (i, j) with p == 0.
struct CoefficientViolation {
  int i = 0;
  int j = 0;
  int p = 0;
  Rational residual;
};

/// Result of substituting alpha_i = 1/(n-i) into the coefficient system for W_n.
/// The two equation groups are enumerated separately so the counts are
/// auditable: interior instances over 2 <= i < j, i+j <= n-2, 1 <= p <= n-i-j-1;
/// last-column instances over 2 <= i < j, i+j <= n.
struct CoefficientSystemReport {
  int n = 0;
  long interior_checked = 0;
  long boundary_checked = 0;
  std::vector<CoefficientViolation> violations;
  bool ok() const { return violations.empty(); }
};

CoefficientSystemReport verify_coefficient_system(int n);

/// Right action of the algebra on row vectors: (x, e) = x * phi(e).
/// entry(k, i) is row k of the matrix representing e_i, read in module
/// coordinates x1..xn.
class ModuleAction {
public:
  ModuleAction(int algebra_dim, int module_dim);

  int algebra_dim() const { return algebra_dim_; }
  int module_dim() const { return module_dim_; }

  Vec entry(int module_index, int algebra_index) const;  // zero when absent
  void set_entry(int module_index, int algebra_index, const Vec& value);

  const std::map<std::pair<int, int>, Vec>& entries() const { return entries_; }

  friend bool operator==(const ModuleAction& a, const ModuleAction& b) {
    return a.algebra_dim_ == b.algebra_dim_ && a.module_dim_ == b.module_dim_ &&
           a.entries_ == b.entries_;
  }
  friend bool operator!=(const ModuleAction& a, const ModuleAction& b) { return !(a == b); }

private:
  int algebra_dim_;
  int module_dim_;
  std::map<std::pair<int, int>, Vec> entries_;  // key (module index, algebra index)
};

/// Reads the action off the representation: entry(k, i) = row k of image(i).
ModuleAction derive_action(const MatrixRep& rep);

/// The closed-form action table for Q/R/W at the given dimension, transcribed
/// independently of the matrices. Throws for family L.
ModuleAction closed_form_action(FamilyId id);

/// Entry-by-entry comparison of a derived action against closed_form_action.
/// Violations carry (module index, algebra index) and the difference.
IdentityReport verify_action_table(const ModuleAction& derived, FamilyId id);

}  // namespace filiform
