#pragma once

#include "filiform/identities.hpp"
#include "filiform/repr.hpp"
#include "filiform/structure_table.hpp"

#include <string>
#include <vector>

namespace filiform {

/// Parameter tuple of one of the three Leibniz families: lambda takes 9 values,
/// mu takes 7, eta takes 4.
enum class LeibnizFamily { lambda, mu, eta };

std::string leibniz_family_name(LeibnizFamily family);
LeibnizFamily leibniz_family_from_string(const std::string& text);
int leibniz_family_arity(LeibnizFamily family);
int leibniz_family_lie_dim(LeibnizFamily family);  // 6 / 5 / 7

struct FamilyParams {
  LeibnizFamily family{};
  std::vector<Rational> values;
};

/// A Leibniz algebra on Lie (+) module with basis e1..em, x1..xk. The x-span is
/// an ideal on which every right bracket vanishes: [x,x'] = 0, [e,x] = 0, and
/// [x,e] lands back in the x-span; dropping the x-components of the e-brackets
/// leaves a Lie algebra table.
struct LeibnizExtension {
  StructureTable table;
  int lie_dim = 0;
  int module_dim = 0;
};

/// The hemisemidirect construction: [e_i,e_j] from the Lie table, [x_k,e_i]
/// from the action, [e_i,x_k] = [x_k,x_l] = 0. Always yields a Leibniz algebra
/// when the action comes from a representation.
LeibnizExtension build_QL(const StructureTable& lie, const ModuleAction& action);

/// The 12-dimensional family lambda(a1..a9) over the 6-dimensional quotient;
/// lambda(0,...,0) coincides entrywise with build_QL of that quotient and its
/// derived minimal-representation action.
LeibnizExtension build_lambda(const FamilyParams& params);

/// The 10-dimensional family mu(g1..g7) over the 5-dimensional Witt quotient.
LeibnizExtension build_mu(const FamilyParams& params);

/// The 14-dimensional family eta(b1..b4) over the 7-dimensional quotient.
LeibnizExtension build_eta(const FamilyParams& params);

LeibnizExtension build_family(const FamilyParams& params);

/// The Lie quotient and derived action a family's extensions are verified
/// against: lambda -> Q6, mu -> W5, eta -> R7.
StructureTable expected_quotient(LeibnizFamily family);
ModuleAction expected_action(LeibnizFamily family);

struct ExtensionReport {
  long leibniz_violations = 0;  // (a) full right-Leibniz check on the table
  bool ideal_ok = false;        // (b) x-span ideal: [x,x]=0, [.,x]=0, [x,e] in x-span
  bool quotient_ok = false;     // (c) e-brackets with x-components dropped == expected quotient
  bool action_ok = false;       // (d) x-part of [x_k,e_i] == expected action entry
  bool structure_ok() const { return ideal_ok && quotient_ok && action_ok; }
  bool all_ok() const { return structure_ok() && leibniz_violations == 0; }
};

ExtensionReport verify_extension(const LeibnizExtension& ext, const StructureTable& quotient,
                                 const ModuleAction& action);

/// Convenience overload against the family's canonical quotient and action.
ExtensionReport verify_extension(const LeibnizExtension& ext, LeibnizFamily family);

/// Conformance with the normalized bracket pattern of the lambda-shaped basis
/// (even Lie part of dimension 2m): [e1,e_i] = e_{i+1} exactly for
/// 2 <= i <= 2m-2, [e_{2m-1},e2] = e_{2m} exactly, [e1,e1] supported on
/// {x1, x2, x_{2m}}, and [e2,e1] = -e3 plus components in {x1, x2} only.
struct NormalFormReport {
  bool conforms = true;
  std::vector<std::string> issues;
};

NormalFormReport verify_normal_form(const LeibnizExtension& ext);

/// Isomorphism-invariant fingerprint: dimensions only, so it is unchanged under
/// any basis change. Used as separation evidence between family members; equal
/// fingerprints decide nothing.
struct Fingerprint {
  std::vector<int> lower_central;
  std::vector<int> derived;
  int center = 0;
  int left_annihilator = 0;
  int right_annihilator = 0;
  int squares_ideal = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const StructureTable& table);

}  // namespace filiform
