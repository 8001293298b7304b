#include "pathweights/linear_system.hpp"

#include <utility>

#include "pathweights/errors.hpp"

namespace pathweights {

LinearSolution solve_exact(RationalMatrix a, std::vector<Rat> b) {
  if (b.size() != a.rows()) throw InvalidParameter("right-hand side length does not match the matrix");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  LinearSolution out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a.at(r, c).is_zero()) ++r;
    if (r == rows) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a.at(r, k), a.at(pivot_row, k));
      std::swap(b[r], b[pivot_row]);
    }
    const Rat inv = Rat(1) / a.at(pivot_row, c);
    for (std::size_t k = c; k < cols; ++k) a.at(pivot_row, k) *= inv;
    b[pivot_row] *= inv;
    for (std::size_t other = 0; other < rows; ++other) {
      if (other == pivot_row || a.at(other, c).is_zero()) continue;
      const Rat factor = a.at(other, c);
      for (std::size_t k = c; k < cols; ++k) a.at(other, k) -= factor * a.at(pivot_row, k);
      b[other] -= factor * b[pivot_row];
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  out.rank = out.pivot_columns.size();

  out.consistent = true;
  for (std::size_t r = out.rank; r < rows; ++r) {
    if (!b[r].is_zero()) out.consistent = false;
  }

  if (out.consistent) {
    out.solution.assign(cols, Rat{});
    for (std::size_t k = 0; k < out.rank; ++k) out.solution[out.pivot_columns[k]] = b[k];
  }
  for (std::size_t f : out.free_columns) {
    std::vector<Rat> v(cols);
    v[f] = Rat(1);
    for (std::size_t k = 0; k < out.rank; ++k) v[out.pivot_columns[k]] = -a.at(k, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

}  // namespace pathweights
