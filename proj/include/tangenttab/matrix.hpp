#pragma once

#include "tangenttab/numeric.hpp"

#include <cstddef>
#include <vector>

namespace tangenttab {

/// Small dense row-major matrix over Q, for exact elimination.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void set_row(std::size_t r, const std::vector<Rational>& values);
  void append_row(const std::vector<Rational>& values);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m);

std::size_t rank(RationalMatrix m);
Rational determinant(RationalMatrix m);
/// A basis of the right kernel.
std::vector<std::vector<Rational>> nullspace(RationalMatrix m);

}  // namespace tangenttab
