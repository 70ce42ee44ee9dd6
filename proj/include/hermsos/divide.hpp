#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hermsos/bareiss.hpp"
#include "hermsos/polynomial.hpp"

namespace hermsos {

template <class Kind>
struct DivisionResult {
  Polynomial<Kind> quotient;
  Polynomial<Kind> remainder;
};

/// Multivariate division of `a` by the single divisor `b` under lex order on
/// term keys (for Hermitian polynomials: z-variables, then zbar-variables).
/// a = quotient * b + remainder, and no remainder term is divisible by the
/// leading monomial of b. With one divisor the remainder vanishes exactly
/// when b divides a.
template <class Kind>
DivisionResult<Kind> divide_single(const Polynomial<Kind>& a, const Polynomial<Kind>& b) {
  a.check_compatible(b);
  if (b.is_zero()) throw std::domain_error("divide_single: zero divisor");
  const auto& [lead_key, lead_coef] = b.leading_term();
  const std::size_t n = a.nvars();
  Polynomial<Kind> q(n), rem(n), p = a;
  while (!p.is_zero()) {
    const auto [key, coef] = p.leading_term();
    if (lead_key.divides(key)) {
      const MultiIndex shift = key - lead_key;
      const GaussianRational factor = coef / lead_coef;
      q.add_term(shift, factor);
      for (const auto& [kb, cb] : b.terms()) p.add_term(kb + shift, -(factor * cb));
    } else {
      rem.add_term(key, coef);
      p.add_term(key, -coef);
    }
  }
  return {std::move(q), std::move(rem)};
}

template <class Kind>
bool divides(const Polynomial<Kind>& b, const Polynomial<Kind>& a) {
  return divide_single(a, b).remainder.is_zero();
}

/// (1 + ||z||^2)^d divides a.
inline bool is_pfister_multiple(const HermPoly& a, int d) { return divides(pfister_base(a.nvars(), d), a); }

/// ||z||^{2d} divides a.
inline bool is_norm_power_multiple(const HermPoly& a, int d) { return divides(norm_power(a.nvars(), d), a); }

// ---------------------------------------------------------------------------
// Univariate toolkit (HoloPoly with one variable x)

inline void require_univariate(const HoloPoly& q) {
  if (q.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
}

inline HoloPoly univariate(std::vector<GaussianRational> coeffs) {
  HoloPoly p(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(MultiIndex{static_cast<int>(k)}, coeffs[k]);
  return p;
}

/// 1 + x.
inline HoloPoly one_plus_x() { return univariate({1, 1}); }

inline HoloPoly derivative(const HoloPoly& q) {
  require_univariate(q);
  HoloPoly r(1);
  for (const auto& [k, c] : q.terms()) {
    if (k[0] > 0) r.add_term(MultiIndex{k[0] - 1}, c * GaussianRational(k[0]));
  }
  return r;
}

struct DescentStep {
  HoloPoly q_next;
  int d_next;
};

/// d/dx[(1+x)^d q] = (1+x)^{d-1} (d q + (1+x) q'); returns the bracket.
inline DescentStep descent_step(const HoloPoly& q, int d) {
  require_univariate(q);
  if (d <= 0) throw std::invalid_argument("descent_step: d must be positive");
  if (q.coefficient(MultiIndex{0}).is_zero()) {
    throw std::invalid_argument("descent_step: q(0) = 0; strip the common power of x first");
  }
  return {q * GaussianRational(d) + one_plus_x() * derivative(q), d - 1};
}

/// Divide out the largest power of x dividing q (q must be nonzero).
inline HoloPoly strip_x_power(const HoloPoly& q) {
  require_univariate(q);
  if (q.is_zero()) return q;
  const int low = q.terms().begin()->first[0];
  HoloPoly r(1);
  for (const auto& [k, c] : q.terms()) r.add_term(MultiIndex{k[0] - low}, c);
  return r;
}

/// Entry (j, k) = binom(k, j), 0 <= j, k <= size-1: change of basis from
/// (1+x)^k-coefficients to monomial coefficients.
struct BasisChangeMatrix {
  DenseMatrix<Integer> entries;

  std::size_t size() const { return entries.size(); }
  const Integer& operator()(std::size_t j, std::size_t k) const { return entries[j][k]; }
};

inline BasisChangeMatrix basis_change_L(std::size_t m_plus_d) {
  const std::size_t size = m_plus_d + 1;
  BasisChangeMatrix L;
  L.entries.assign(size, std::vector<Integer>(size, 0));
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = j; k < size; ++k) L.entries[j][k] = binomial(static_cast<long>(k), static_cast<long>(j));
  }
  return L;
}

/// Outcome of enumerating every square submatrix of L' (L with its first d
/// columns deleted) of size m+1.
struct LprimeReport {
  std::size_t submatrices = 0;
  std::size_t invertible = 0;
  bool all_invertible() const { return submatrices == invertible; }
};

inline LprimeReport enumerate_Lprime_submatrices(std::size_t m, std::size_t d) {
  const BasisChangeMatrix L = basis_change_L(m + d);
  const std::size_t rows = L.size(), k = m + 1;
  LprimeReport rep;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    DenseMatrix<Integer> sub(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t c = 0; c < k; ++c) sub[i][c] = L(pick[i], d + c);
    }
    ++rep.submatrices;
    if (bareiss_determinant(std::move(sub)) != 0) ++rep.invertible;
    // next k-subset of {0..rows-1} in lex order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == rows - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return rep;
}

inline bool check_Lprime_submatrices(std::size_t m, std::size_t d) {
  if (d == 0) throw std::invalid_argument("check_Lprime_submatrices: d must be positive");
  return enumerate_Lprime_submatrices(m, d).all_invertible();
}

}  // namespace hermsos
