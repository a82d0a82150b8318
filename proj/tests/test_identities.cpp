#include "filiform/identities.hpp"

#include "filiform/catalog.hpp"
#include "filiform/leibniz.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <array>
#include <cstdlib>
#include <random>

using namespace filiform;

namespace {

FamilyParams zeros(LeibnizFamily family) {
  return {family, std::vector<Rational>(static_cast<std::size_t>(leibniz_family_arity(family)))};
}

/// Antisymmetric table that genuinely fails Jacobi:
/// [e1,e2] = e3, [e1,e3] = e1 (plus antisymmetric partners). The cyclic sum at
/// (1,2,3) is [e3,e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 + 0 - [e1,e2] = -e3.
StructureTable jacobi_fault_table() {
  StructureTable t(3, standard_basis_labels(3), "fault");
  t.set_bracket(1, 2, Vec::unit(3, 3));
  t.set_bracket(2, 1, -Vec::unit(3, 3));
  t.set_bracket(1, 3, Vec::unit(3, 1));
  t.set_bracket(3, 1, -Vec::unit(3, 1));
  return t;
}

}  // namespace

TEST_CASE("antisymmetry checker") {
  const IdentityReport q6 = check_antisymmetry(build_Q(6));
  CHECK(q6.checked == 36);
  CHECK(q6.ok());

  // Leibniz tables are not antisymmetric: [x1,e2] = x2 but [e2,x1] = 0
  const IdentityReport lam = check_antisymmetry(build_lambda(zeros(LeibnizFamily::lambda)).table);
  CHECK_FALSE(lam.ok());
  bool found = false;
  for (const auto& v : lam.violations)
    if (v.i == 7 && v.j == 2) found = true;
  CHECK(found);

  const StructureTable zero(3, standard_basis_labels(3));
  CHECK(check_antisymmetry(zero).ok());
}

TEST_CASE("jacobi checker on catalog algebras") {
  const IdentityReport w9 = check_jacobi(build_W(9));
  CHECK(w9.checked == 729);
  CHECK(w9.ok());
  CHECK(check_jacobi(build_R(7)).ok());
}

TEST_CASE("jacobi checker flags a genuine violation") {
  const IdentityReport report = check_jacobi(jacobi_fault_table());
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations.front().i == 1);
  CHECK(report.violations.front().j == 2);
  CHECK(report.violations.front().k == 3);

  // The 2-dim table [e1,e2] = e1 = -[e2,e1] is the affine Lie algebra: every
  // cyclic sum telescopes, so it is NOT a Jacobi counterexample.
  StructureTable affine(2, standard_basis_labels(2));
  affine.set_bracket(1, 2, Vec::unit(2, 1));
  affine.set_bracket(2, 1, -Vec::unit(2, 1));
  CHECK(check_jacobi(affine).ok());
}

TEST_CASE("lie tables satisfy the right Leibniz identity") {
  for (const auto& table : {build_L(6), build_Q(8), build_R(7), build_W(7)}) {
    CHECK(check_antisymmetry(table).ok());
    CHECK(check_jacobi(table).ok());
    CHECK(check_leibniz(table).ok());
  }
}

TEST_CASE("leibniz checker on the zero-parameter families") {
  const IdentityReport eta = check_leibniz(build_eta(zeros(LeibnizFamily::eta)).table);
  CHECK(eta.checked == 14 * 14 * 14);
  CHECK(eta.ok());
  const IdentityReport mu = check_leibniz(build_mu(zeros(LeibnizFamily::mu)).table);
  CHECK(mu.checked == 1000);
  CHECK(mu.ok());
}

TEST_CASE("leibniz checker agrees with an independently coded triple loop") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 5; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    const StructureTable t = testutil::random_table(rng, n);

    // oracle: dense evaluation through full vectors only
    std::vector<std::array<int, 3>> expected;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          const Vec ei = Vec::unit(n, i), ej = Vec::unit(n, j), ek = Vec::unit(n, k);
          const Vec lhs = t.eval(t.eval(ei, ej), ek);
          const Vec rhs = t.eval(t.eval(ei, ek), ej) + t.eval(ei, t.eval(ej, ek));
          if (lhs != rhs) expected.push_back({i, j, k});
        }

    const IdentityReport report = check_leibniz(t);
    REQUIRE(report.violations.size() == expected.size());
    for (std::size_t v = 0; v < expected.size(); ++v) {
      CHECK(report.violations[v].i == expected[v][0]);
      CHECK(report.violations[v].j == expected[v][1]);
      CHECK(report.violations[v].k == expected[v][2]);
    }
  }
}

TEST_CASE("checker output is independent of the thread budget") {
  const StructureTable table = build_eta(zeros(LeibnizFamily::eta)).table;
  setenv("FILIFORM_THREADS", "1", 1);
  const IdentityReport serial = check_leibniz(table);
  setenv("FILIFORM_THREADS", "5", 1);
  const IdentityReport parallel = check_leibniz(table);
  unsetenv("FILIFORM_THREADS");
  CHECK(serial.checked == parallel.checked);
  CHECK(serial.violations.size() == parallel.violations.size());
}

TEST_CASE("lower central series dimensions") {
  CHECK(series_profile(build_L(5)).lower_central_dims == std::vector<int>{5, 3, 2, 1, 0});
  CHECK(series_profile(build_Q(6)).lower_central_dims == std::vector<int>{6, 4, 3, 2, 1, 0});
  const StructureTable abelian(4, standard_basis_labels(4));
  CHECK(series_profile(abelian).lower_central_dims == std::vector<int>{4, 0});
}

TEST_CASE("filiform predicate") {
  CHECK(is_filiform(build_R(7)));
  CHECK(is_filiform(build_W(9)));
  const StructureTable abelian(4, standard_basis_labels(4));
  CHECK_FALSE(is_filiform(abelian));
}

TEST_CASE("profile of the zero-parameter 12-dim extension") {
  const SeriesProfile p = series_profile(build_lambda(zeros(LeibnizFamily::lambda)).table);
  CHECK(p.lower_central_dims == std::vector<int>{12, 9, 7, 5, 3, 1, 0});
  CHECK(p.derived_dims == std::vector<int>{12, 9, 2, 0});
  CHECK(p.center_dim == 1);
  CHECK(p.left_annihilator_dim == 2);
  CHECK(p.right_annihilator_dim == 6);
  CHECK(p.squares_ideal_dim == 5);
}

TEST_CASE("squares ideal") {
  // antisymmetry forces every square to zero
  CHECK(squares_ideal(build_L(5)).empty());
  CHECK(squares_ideal(build_W(8)).empty());

  // [e1,e1] = x6 puts x6 into the ideal
  FamilyParams params = zeros(LeibnizFamily::lambda);
  params.values[0] = 1;
  const auto basis = squares_ideal(build_lambda(params).table);
  auto extended = basis;
  extended.push_back(Vec::unit(12, 12));  // x6 of the 12-dim extension
  CHECK(rank(extended) == static_cast<int>(basis.size()));
}

TEST_CASE("squares ideal matches a randomized square-sampling oracle") {
  std::mt19937_64 rng(61);
  const StructureTable table = build_lambda(zeros(LeibnizFamily::lambda)).table;
  const int n = table.dim();

  // oracle: span of [v,v] for random elements v, closed under right bracketing
  std::vector<Vec> gens;
  for (int s = 0; s < 60; ++s) {
    const Vec v = testutil::random_vec(rng, n);
    Vec sq = table.eval(v, v);
    if (!sq.is_zero()) gens.push_back(std::move(sq));
  }
  for (;;) {
    const int before = rank(gens);
    std::vector<Vec> extended = gens;
    for (const auto& v : row_space_basis(gens))
      for (int j = 1; j <= n; ++j) {
        Vec w = table.eval(v, Vec::unit(n, j));
        if (!w.is_zero()) extended.push_back(std::move(w));
      }
    if (rank(extended) == before) break;
    gens = std::move(extended);
  }
  CHECK(rank(gens) == 5);
  CHECK(static_cast<int>(squares_ideal(table).size()) == 5);
}
