#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "hermsos/coeff_matrix.hpp"
#include "hermsos/errors.hpp"
#include "hermsos/polynomial.hpp"

namespace hermsos {

/// r = sum_j weights[j] * |polys[j]|^2 with every weight strictly positive.
///
/// The unit-weight form sum |p_j|^2 has the same length: p_j = sqrt(d_j) l_j.
/// Keeping d_j separate keeps every coefficient in Q(i).
struct SquaredNormCert {
  std::vector<Rational> weights;
  std::vector<HoloPoly> polys;

  std::size_t length() const { return weights.size(); }
};

inline HermPoly reconstruct(const SquaredNormCert& cert, std::size_t nvars) {
  HermPoly r(nvars);
  for (std::size_t j = 0; j < cert.length(); ++j) r += squared_modulus(cert.polys[j]) * GaussianRational(cert.weights[j]);
  return r;
}

namespace detail {

/// Pivot order for the LDL sweep: ascending total degree; within one degree
/// z1 before z2 (descending lex), so (1 + ||z||^2)^d yields 1, z1, ..., zn, ...
inline std::vector<std::size_t> pivot_order(const std::vector<MultiIndex>& idx) {
  std::vector<std::size_t> order(idx.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int da = idx[a].total(), db = idx[b].total();
    if (da != db) return da < db;
    return idx[b] < idx[a];
  });
  return order;
}

/// Exact LDL^H with diagonal pivoting in `pivot_order`. Returns the
/// certificate if the matrix is PSD, nullopt otherwise.
inline std::optional<SquaredNormCert> ldl_certificate(const CoeffMatrix& m) {
  SquaredNormCert cert;
  DenseMatrix<GaussianRational> s = m.entries;
  const std::size_t size = m.rows();
  std::vector<bool> done(size, false);
  for (std::size_t k : pivot_order(m.row_index)) {
    done[k] = true;
    const GaussianRational pivot = s[k][k];
    if (!pivot.is_real() || pivot.re() < 0) return std::nullopt;
    if (pivot.is_zero()) {
      for (std::size_t j = 0; j < size; ++j) {
        if (!done[j] && !s[k][j].is_zero()) return std::nullopt;
      }
      continue;
    }
    HoloPoly l(m.nvars);
    l.add_term(m.row_index[k], 1);
    std::vector<GaussianRational> v(size);
    for (std::size_t a = 0; a < size; ++a) {
      if (done[a]) continue;
      v[a] = s[a][k] / pivot;
      l.add_term(m.row_index[a], v[a]);
    }
    for (std::size_t a = 0; a < size; ++a) {
      if (done[a] || v[a].is_zero()) continue;
      for (std::size_t b = 0; b < size; ++b) {
        if (done[b] || s[k][b].is_zero()) continue;
        s[a][b] -= v[a] * s[k][b];
      }
    }
    cert.weights.push_back(pivot.re());
    cert.polys.push_back(std::move(l));
  }
  return cert;
}

inline CoeffMatrix require_hermitian_matrix(const HermPoly& a) {
  CoeffMatrix m = build_matrix(a);
  if (!is_hermitian(m)) throw MathError(MathError::Kind::NotHermitian, "coefficient matrix is not Hermitian");
  return m;
}

}  // namespace detail

/// True iff the (Hermitian) coefficient matrix is positive semidefinite.
inline bool psd_check(const HermPoly& a) {
  if (a.is_zero()) return true;
  return detail::ldl_certificate(detail::require_hermitian_matrix(a)).has_value();
}

/// Exact weighted squared-norm certificate of minimal length.
inline SquaredNormCert squared_norm_decompose(const HermPoly& a) {
  if (a.is_zero()) throw MathError(MathError::Kind::ZeroInput, "cannot decompose the zero polynomial");
  auto cert = detail::ldl_certificate(detail::require_hermitian_matrix(a));
  if (!cert) throw MathError(MathError::Kind::NotPsd, "coefficient matrix is not positive semidefinite");
  return *cert;
}

/// Minimal number of squares; equals the coefficient-matrix rank.
inline std::size_t hermitian_length(const HermPoly& a) {
  if (a.is_zero()) return 0;
  return squared_norm_decompose(a).length();
}

}  // namespace hermsos
