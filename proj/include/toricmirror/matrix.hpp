// Dense exact linear algebra over Q.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "toricmirror/rat.hpp"

namespace toricmirror {

using RatVector = std::vector<Rat>;

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<RatVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;

  /// Rows of `other` appended below this matrix. Column counts must agree.
  RatMatrix stacked(const RatMatrix& other) const;

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rat& s, const RatMatrix& m);
RatVector operator*(const RatMatrix& m, const RatVector& v);

bool is_zero(const RatVector& v);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row.
RrefResult rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of the right null space, one vector per non-pivot column, with a 1 in
/// that column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Some x with m*x = b, or nullopt when b is outside the column space.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

Rat determinant(const RatMatrix& m);

}  // namespace toricmirror
