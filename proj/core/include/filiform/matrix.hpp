#pragma once

#include "filiform/rational.hpp"
#include "filiform/vec.hpp"

#include <optional>
#include <vector>

namespace filiform {

/// Dense square matrix over the rationals, 1-based indices. Dense is deliberate:
/// every matrix in the library is at most ~40x40, where strictly-upper-triangular
/// sparsity buys nothing.
class Matrix {
public:
  explicit Matrix(int size);

  /// Matrix unit E_{row,col}: 1 at (row, col), 0 elsewhere.
  static Matrix unit(int size, int row, int col);

  int size() const { return n_; }

  const Rational& at(int row, int col) const;
  void set(int row, int col, Rational value);

  bool is_zero() const;

  /// entries(i, j) == 0 whenever i >= j.
  bool is_strictly_upper() const;

  Vec row(int r) const;

  /// Row-major flattening into a dim = size*size vector; used to take ranks of
  /// families of matrices (faithfulness certificates).
  Vec vectorized() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator-(Matrix a);

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  int n_ = 0;
  std::vector<Rational> e_;  // row-major

  Rational& cell(int row, int col) { return e_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))]; }
  const Rational& cell(int row, int col) const {
    return e_[static_cast<std::size_t>((row - 1) * n_ + (col - 1))];
  }
};

/// AB - BA, exact. Throws std::invalid_argument on size mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Rank over the rationals by exact Gaussian elimination. Empty input has rank 0;
/// mixed-dimension rows throw.
int rank(std::vector<Vec> rows);

/// Reduced row-echelon basis of the row space (pivot-normalized, pivots ascending).
std::vector<Vec> row_space_basis(std::vector<Vec> rows);

/// Exact inverse via Gauss-Jordan; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace filiform
