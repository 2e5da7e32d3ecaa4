#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyparr/rational.hpp"

namespace hyparr {

using QVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Builds a matrix from a list of equally long rows.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  QVector column(std::size_t c) const;
  QMatrix transpose() const;

  QVector apply(std::span<const Rational> x) const;
  QMatrix operator*(const QMatrix& other) const;

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  QMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row; no magnitude heuristics.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Kernel basis, one vector per free column in ascending order. The vector
/// for free column f has a 1 in position f and zeros in every other free
/// position.
std::vector<QVector> nullspace(const QMatrix& m);

struct AffineSolution {
  QVector particular;               ///< free variables set to zero
  std::vector<QVector> directions;  ///< nullspace(A)
};

/// Solves A x = b; std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const QMatrix& a, std::span<const Rational> b);

Rational determinant(const QMatrix& m);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Coordinates of v in the basis given by the columns of `basis`;
/// std::nullopt when v is outside their span. Columns must be independent.
std::optional<QVector> coordinates_in(const std::vector<QVector>& basis, std::span<const Rational> v);

}  // namespace hyparr
