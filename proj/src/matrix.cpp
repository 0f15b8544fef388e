#include "smalg/matrix.hpp"

#include <algorithm>

#include "smalg/errors.hpp"

namespace smalg {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).add_product(aik, b(k, j));
    }
  return c;
}

SpanSolver::SpanSolver(const std::vector<std::vector<Rational>>& columns)
    : nrows_(columns.empty() ? 0 : columns.front().size()), ncols_(columns.size()) {
  reduced_ = RationalMatrix(nrows_, ncols_);
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (columns[j].size() != nrows_) throw ShapeError("SpanSolver: ragged columns");
    for (std::size_t i = 0; i < nrows_; ++i) reduced_(i, j) = columns[j][i];
  }
  transform_ = RationalMatrix::identity(nrows_);

  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols_ && row < nrows_; ++col) {
    std::size_t p = row;
    while (p < nrows_ && reduced_(p, col).is_zero()) ++p;
    if (p == nrows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < ncols_; ++j) std::swap(reduced_(p, j), reduced_(row, j));
      for (std::size_t j = 0; j < nrows_; ++j) std::swap(transform_(p, j), transform_(row, j));
    }
    const Rational inv = Rational(1) / reduced_(row, col);
    for (std::size_t j = 0; j < ncols_; ++j) reduced_(row, j) *= inv;
    for (std::size_t j = 0; j < nrows_; ++j) transform_(row, j) *= inv;
    for (std::size_t i = 0; i < nrows_; ++i) {
      if (i == row || reduced_(i, col).is_zero()) continue;
      const Rational f = reduced_(i, col);
      for (std::size_t j = 0; j < ncols_; ++j) reduced_(i, j) -= f * reduced_(row, j);
      for (std::size_t j = 0; j < nrows_; ++j) transform_(i, j) -= f * transform_(row, j);
    }
    pivots_.push_back(col);
    ++row;
  }
}

std::optional<std::vector<Rational>> SpanSolver::solve(const std::vector<Rational>& b) const {
  if (b.size() != nrows_) throw ShapeError("SpanSolver::solve: wrong vector length");
  if (rank() != ncols_) throw RankError("SpanSolver::solve: columns are linearly dependent");
  std::vector<Rational> c(nrows_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < nrows_; ++j) c[i].add_product(transform_(i, j), b[j]);
  for (std::size_t i = rank(); i < nrows_; ++i)
    if (!c[i].is_zero()) return std::nullopt;
  std::vector<Rational> x(ncols_);
  for (std::size_t i = 0; i < rank(); ++i) x[pivots_[i]] = c[i];
  return x;
}

}  // namespace smalg
