#include "filiform/matrix.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace filiform;

TEST_CASE("matrix units") {
  const Matrix m = Matrix::unit(3, 1, 2);
  for (int r = 1; r <= 3; ++r)
    for (int c = 1; c <= 3; ++c) CHECK(m.at(r, c) == ((r == 1 && c == 2) ? Rational(1) : Rational(0)));
  CHECK(Matrix::unit(2, 2, 2).at(2, 2) == Rational(1));
  CHECK_THROWS_AS(Matrix::unit(3, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(Matrix::unit(3, 1, 4), std::out_of_range);
}

TEST_CASE("matrix unit multiplication rule, exhaustive through size 8") {
  CHECK(Matrix::unit(6, 4, 5) * Matrix::unit(6, 5, 6) == Matrix::unit(6, 4, 6));
  for (int n = 1; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            const Matrix product = Matrix::unit(n, i, j) * Matrix::unit(n, k, l);
            if (j == k)
              CHECK(product == Matrix::unit(n, i, l));
            else
              CHECK(product.is_zero());
          }
}

TEST_CASE("commutator basics") {
  std::mt19937_64 rng(11);
  const Matrix z = testutil::random_strictly_upper(rng, 5);
  CHECK(commutator(z, z).is_zero());
  CHECK_THROWS_AS(commutator(Matrix(3), Matrix(4)), std::invalid_argument);
}

TEST_CASE("commutator of the first two generator images in size 6") {
  Matrix a(6), b(6);
  for (int k = 2; k <= 4; ++k) a.set(k, k + 1, 1);  // E23 + E34 + E45
  b.set(1, 2, 1);
  b.set(5, 6, 1);  // E12 + E56
  const Matrix expected = Matrix::unit(6, 4, 6) - Matrix::unit(6, 1, 3);
  CHECK(commutator(a, b) == expected);
}

TEST_CASE("commutator antisymmetry and triangular closure on random matrices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const Matrix a = testutil::random_strictly_upper(rng, n);
    const Matrix b = testutil::random_strictly_upper(rng, n);
    CHECK(commutator(a, b) == -commutator(b, a));
    CHECK((a * b).is_strictly_upper());
    CHECK(commutator(a, b).is_strictly_upper());
  }
}

TEST_CASE("rank by exact elimination") {
  CHECK(rank({}) == 0);
  {
    Vec r1(2), r2(2);
    r1.set_coord(1, 1);
    r2.set_coord(2, 1);
    CHECK(rank({r1, r2}) == 2);
  }
  {
    Vec r1(2), r2(2), r3(2);
    r1.set_coord(1, 1);
    r1.set_coord(2, 2);
    r2.set_coord(1, 2);
    r2.set_coord(2, 4);
    r3.set_coord(1, 1);
    CHECK(rank({r1, r2, r3}) == 2);
  }
  {
    Vec bad(3);
    CHECK_THROWS_AS(rank({Vec(2), bad}), std::invalid_argument);
  }
}

TEST_CASE("row space basis is reduced echelon") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    std::vector<Vec> rows;
    for (int r = 0; r < n + 2; ++r) rows.push_back(testutil::random_vec(rng, n));
    const auto basis = row_space_basis(rows);
    CHECK(static_cast<int>(basis.size()) == rank(rows));
    // appending any original row must not enlarge the span
    for (const auto& row : rows) {
      auto extended = basis;
      extended.push_back(row);
      CHECK(rank(extended) == static_cast<int>(basis.size()));
    }
  }
}

TEST_CASE("exact inverse") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Matrix p = testutil::random_invertible(rng, n);
    const auto inv = inverse(p);
    REQUIRE(inv.has_value());
    Matrix identity(n);
    for (int i = 1; i <= n; ++i) identity.set(i, i, 1);
    CHECK(*inv * p == identity);
    CHECK(p * *inv == identity);
  }
  Matrix singular(3);
  singular.set(1, 2, 1);
  CHECK_FALSE(inverse(singular).has_value());
}
