#include "filiform/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace filiform {

namespace {
void check_index(int n, int row, int col) {
  if (row < 1 || row > n || col < 1 || col > n)
    throw std::out_of_range("Matrix: index out of range");
}
}  // namespace

Matrix::Matrix(int size) : n_(size) {
  if (size < 1) throw std::invalid_argument("Matrix: size must be positive");
  e_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
}

Matrix Matrix::unit(int size, int row, int col) {
  Matrix m(size);
  check_index(size, row, col);
  m.cell(row, col) = 1;
  return m;
}

const Rational& Matrix::at(int row, int col) const {
  check_index(n_, row, col);
  return cell(row, col);
}

void Matrix::set(int row, int col, Rational value) {
  check_index(n_, row, col);
  cell(row, col) = std::move(value);
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_strictly_upper() const {
  for (int r = 1; r <= n_; ++r)
    for (int c = 1; c <= r; ++c)
      if (!cell(r, c).is_zero()) return false;
  return true;
}

Vec Matrix::row(int r) const {
  if (r < 1 || r > n_) throw std::out_of_range("Matrix: row index out of range");
  Vec v(n_);
  for (int c = 1; c <= n_; ++c)
    if (!cell(r, c).is_zero()) v.set_coord(c, cell(r, c));
  return v;
}

Vec Matrix::vectorized() const {
  Vec v(n_ * n_);
  for (int i = 0; i < n_ * n_; ++i)
    if (!e_[static_cast<std::size_t>(i)].is_zero()) v.set_coord(i + 1, e_[static_cast<std::size_t>(i)]);
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (n_ != o.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("Matrix: dimension mismatch");
  const int n = a.n_;
  Matrix out(n);
  for (int r = 1; r <= n; ++r)
    for (int k = 1; k <= n; ++k) {
      const Rational& ark = a.cell(r, k);
      if (ark.is_zero()) continue;
      for (int c = 1; c <= n; ++c) {
        const Rational& bkc = b.cell(k, c);
        if (!bkc.is_zero()) out.cell(r, c) += ark * bkc;
      }
    }
  return out;
}

Matrix operator-(Matrix a) {
  for (auto& x : a.e_) x = -x;
  return a;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

std::vector<Vec> row_space_basis(std::vector<Vec> rows) {
  if (rows.empty()) return {};
  const int dim = rows.front().dim();
  for (const auto& r : rows)
    if (r.dim() != dim) throw std::invalid_argument("rank: mixed row dimensions");

  std::vector<Vec> basis;  // echelon rows, pivot columns strictly increasing
  std::vector<int> pivots;
  for (auto& row : rows) {
    // reduce against existing echelon rows
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& c = row.coord(pivots[b]);
      if (!c.is_zero()) row.add_scaled(-c, basis[b]);
    }
    int piv = 0;
    for (int c = 1; c <= dim; ++c)
      if (!row.coord(c).is_zero()) {
        piv = c;
        break;
      }
    if (piv == 0) continue;
    row *= row.coord(piv).inverse();
    // insert keeping pivot order; back-substitute into earlier rows
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& c = basis[b].coord(piv);
      if (!c.is_zero()) basis[b].add_scaled(-c, row);
    }
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < piv) ++pos;
    basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), piv);
  }
  return basis;
}

int rank(std::vector<Vec> rows) { return static_cast<int>(row_space_basis(std::move(rows)).size()); }

std::optional<Matrix> inverse(const Matrix& m) {
  const int n = m.size();
  // augmented [m | I], eliminated in place
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(2 * n)));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) a[r][c] = m.at(r + 1, c + 1);
    a[r][static_cast<std::size_t>(n + r)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(piv)]);
    const Rational inv = a[col][col].inverse();
    for (int c = col; c < 2 * n; ++c) a[col][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (int c = col; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Matrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.set(r + 1, c + 1, a[r][static_cast<std::size_t>(n + c)]);
  return out;
}

}  // namespace filiform
