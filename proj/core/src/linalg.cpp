#include "hyparr/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hyparr {

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) throw std::invalid_argument("QMatrix: entry count mismatch");
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

QVector QMatrix::apply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw std::invalid_argument("QMatrix::apply: size mismatch");
  QVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("QMatrix::operator*: shape mismatch");
  QMatrix p(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) p(r, c) += a * other(k, c);
    }
  return p;
}

RrefResult rref(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t p = row;
    while (p < r.rows() && r(p, col).is_zero()) ++p;
    if (p == r.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r(p, c), r(row, c));
    const Rational inv = r(row, col).inverse();
    for (std::size_t c = col; c < r.cols(); ++c) r(row, c) *= inv;
    for (std::size_t other = 0; other < r.rows(); ++other) {
      if (other == row || r(other, col).is_zero()) continue;
      const Rational f = r(other, col);
      for (std::size_t c = col; c < r.cols(); ++c) r(other, c) -= f * r(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

std::vector<QVector> nullspace(const QMatrix& m) {
  const RrefResult res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : res.pivot_columns) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < res.pivot_columns.size(); ++i) v[res.pivot_columns[i]] = -res.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const QMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_affine: rhs size mismatch");
  const std::size_t n = a.cols();
  QMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const RrefResult res = rref(aug);
  if (!res.pivot_columns.empty() && res.pivot_columns.back() == n) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(n, Rational{});
  for (std::size_t i = 0; i < res.pivot_columns.size(); ++i) sol.particular[res.pivot_columns[i]] = res.reduced(i, n);
  sol.directions = nullspace(a);
  return sol;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
  QMatrix r = m;
  const std::size_t n = r.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && r(p, col).is_zero()) ++p;
    if (p == n) return Rational{};
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(r(p, c), r(col, c));
      det = -det;
    }
    det *= r(col, col);
    const Rational inv = r(col, col).inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (r(row, col).is_zero()) continue;
      const Rational f = r(row, col) * inv;
      for (std::size_t c = col; c < n; ++c) r(row, c) -= f * r(col, c);
    }
  }
  return det;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

std::optional<QVector> coordinates_in(const std::vector<QVector>& basis, std::span<const Rational> v) {
  QMatrix a(v.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < v.size(); ++r) a(r, c) = basis[c][r];
  auto sol = solve_affine(a, v);
  if (!sol) return std::nullopt;
  return std::move(sol->particular);
}

}  // namespace hyparr
