#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ksf::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

/// In-place reduced row echelon form over an exact field. Returns the pivot
/// column of each nonzero row, in order.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m, std::size_t cols) {
  const F zero{};
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == zero) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    F inv = F(1) / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == zero) continue;
      F f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m, std::size_t cols) {
  return rref(m, cols).size();
}

/// Basis of { x : m x = 0 }, one vector per free column, with a 1 in that
/// column (the standard RREF basis).
template <class F>
Matrix<F> nullspace(Matrix<F> m, std::size_t cols) {
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(cols, F{});
    v[free] = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace ksf::linalg
