#include "toricmirror/matrix.hpp"

#include <cassert>
#include <utility>

namespace toricmirror {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    assert(r.size() == cols_);
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].size() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& columns, std::size_t rows) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    assert(columns[c].size() == rows);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::stacked(const RatMatrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  assert(cols_ == other.cols_);
  RatMatrix out = *this;
  out.rows_ += other.rows_;
  out.entries_.insert(out.entries_.end(), other.entries_.begin(), other.entries_.end());
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  assert(a.cols() == b.rows());
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows() == b.rows() && a.cols() == b.cols());
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  return out;
}

RatMatrix operator*(const Rat& s, const RatMatrix& m) {
  RatMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  assert(m.cols() == v.size());
  RatVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RrefResult rref(RatMatrix m) {
  RrefResult result;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rat inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rat factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    result.pivots.push_back(col);
    ++row;
  }
  result.reduced = std::move(m);
  return result;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank(); }

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
  assert(b.size() == m.rows());
  RatMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) augmented(i, j) = m(i, j);
    augmented(i, m.cols()) = b[i];
  }
  const RrefResult r = rref(std::move(augmented));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

Rat determinant(const RatMatrix& m) {
  assert(m.rows() == m.cols());
  RatMatrix a = m;
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rat factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

}  // namespace toricmirror
