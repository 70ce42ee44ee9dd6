#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hermsos/scalar.hpp"

namespace hermsos {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Result of fraction-free elimination. `last_pivot` is, up to sign, the
/// largest nonvanishing leading minor of the pivoted matrix; for a square
/// nonsingular input it is +-det.
template <class T>
struct BareissResult {
  std::size_t rank = 0;
  T last_pivot{};
  int sign = 1;  // parity of row and column swaps
};

/// Fraction-free (Bareiss) elimination over an integral domain T with full
/// pivoting. The pivot at step k is the first nonzero entry of the trailing
/// submatrix in row-major scan order, so the pivot sequence is reproducible.
/// T must provide `*`, `-`, `is_zero(T)` and exact `exact_div(T, T)`.
template <class T>
BareissResult<T> bareiss_eliminate(DenseMatrix<T> m) {
  BareissResult<T> out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  T prev = T{1};
  out.last_pivot = prev;
  for (std::size_t k = 0; k < rows && k < cols; ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (!is_zero(m[i][j])) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != k) {
      std::swap(m[pr], m[k]);
      out.sign = -out.sign;
    }
    if (pc != k) {
      for (auto& row : m) std::swap(row[pc], row[k]);
      out.sign = -out.sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
      }
      m[i][k] = T{};
    }
    prev = m[k][k];
    out.last_pivot = prev;
    ++out.rank;
  }
  return out;
}

template <class T>
std::size_t bareiss_rank(DenseMatrix<T> m) {
  return bareiss_eliminate(std::move(m)).rank;
}

/// Exact determinant of a square integer matrix.
inline Integer bareiss_determinant(DenseMatrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  auto r = bareiss_eliminate(std::move(m));
  if (r.rank < n) return 0;
  return r.sign > 0 ? r.last_pivot : Integer(-r.last_pivot);
}

}  // namespace hermsos
