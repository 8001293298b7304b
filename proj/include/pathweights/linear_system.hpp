#pragma once

#include <cstddef>
#include <vector>

#include "pathweights/rat.hpp"

namespace pathweights {

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
  /// Particular solution with every free variable at zero; empty if inconsistent.
  std::vector<Rat> solution;
  /// One vector per free column, in free-column order.
  std::vector<std::vector<Rat>> kernel_basis;
};

/// Gauss-Jordan elimination over the rationals. Pivots are taken as the
/// first nonzero entry scanning columns left to right, rows top to bottom,
/// so the result depends only on the column order.
LinearSolution solve_exact(RationalMatrix a, std::vector<Rat> b);

}  // namespace pathweights
