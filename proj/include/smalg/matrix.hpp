#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "smalg/rational.hpp"

namespace smalg {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  /// Row-major entries, used to treat a matrix as a vector of length rows*cols.
  [[nodiscard]] const std::vector<Rational>& entries() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact solver for x in span(columns): columns are fixed at construction and
/// reduced once by Gauss-Jordan elimination over the rationals.
class SpanSolver {
 public:
  explicit SpanSolver(const std::vector<std::vector<Rational>>& columns);

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
  [[nodiscard]] std::size_t column_count() const { return ncols_; }

  /// Coefficients x with Σ x_j columns_j = b, or nullopt when b is outside the
  /// span. Requires full column rank.
  [[nodiscard]] std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  // Row operations recorded as a square transform: reduced = transform * A.
  RationalMatrix transform_;
  RationalMatrix reduced_;
  std::vector<std::size_t> pivots_;  // pivot column of reduced row i
};

}  // namespace smalg
