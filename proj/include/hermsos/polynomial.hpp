#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "hermsos/multi_index.hpp"
#include "hermsos/scalar.hpp"

namespace hermsos {

/// Polynomial in z only: sum c_alpha z^alpha.
struct HolomorphicKind {
  static constexpr std::size_t slots = 1;
  static constexpr bool real_only = false;
};

/// Real polynomial in x_j = |z_j|^2.
struct DiagonalKind {
  static constexpr std::size_t slots = 1;
  static constexpr bool real_only = true;
};

/// Polynomial in (z, zbar): sum c_{alpha,beta} z^alpha zbar^beta. Keys are the
/// concatenation (alpha, beta), so lex order on keys is lex on (alpha, beta)
/// with every z-variable ranked above every zbar-variable.
struct HermitianKind {
  static constexpr std::size_t slots = 2;
  static constexpr bool real_only = false;
};

/// Sparse polynomial with exact Gaussian-rational coefficients, kept in
/// canonical form: no stored zero, terms ordered lex by key. Equality is
/// structural.
template <class Kind>
class Polynomial {
 public:
  using TermMap = std::map<MultiIndex, GaussianRational>;

  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {
    if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
  }

  static Polynomial constant(std::size_t nvars, const GaussianRational& c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(p.key_length()), c);
    return p;
  }

  static Polynomial monomial(std::size_t nvars, const MultiIndex& key,
                             const GaussianRational& c = GaussianRational(1)) {
    Polynomial p(nvars);
    p.add_term(key, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t key_length() const { return nvars_ * Kind::slots; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GaussianRational coefficient(const MultiIndex& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  /// Lex-largest term. Requires a nonzero polynomial.
  const std::pair<const MultiIndex, GaussianRational>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return *terms_.rbegin();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.total());
    return d;
  }

  /// Accumulate c * x^key, dropping the entry if it cancels to zero.
  void add_term(const MultiIndex& key, const GaussianRational& c) {
    if (key.size() != key_length()) throw std::invalid_argument("term key has wrong length");
    if constexpr (Kind::real_only) {
      if (!c.is_real()) throw std::invalid_argument("non-real coefficient in real polynomial");
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  Polynomial& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    if constexpr (Kind::real_only) {
      if (!s.is_real()) throw std::invalid_argument("non-real scalar applied to real polynomial");
    }
    return *this;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& s) { return a *= s; }
  friend Polynomial operator*(const GaussianRational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    for (const auto& [ka, ca] : a.terms_) {
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
    }
    return r;
  }

  Polynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Polynomial r = constant(nvars_, 1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) {
      throw std::invalid_argument("variable-count mismatch: " + std::to_string(nvars_) +
                                  " vs " + std::to_string(o.nvars_));
    }
  }

 private:
  std::size_t nvars_;
  TermMap terms_;
};

using HoloPoly = Polynomial<HolomorphicKind>;
using DiagPoly = Polynomial<DiagonalKind>;
using HermPoly = Polynomial<HermitianKind>;

// ---------------------------------------------------------------------------
// Hermitian helpers

inline MultiIndex alpha_of(const MultiIndex& key, std::size_t nvars) { return key.slice(0, nvars); }
inline MultiIndex beta_of(const MultiIndex& key, std::size_t nvars) { return key.slice(nvars, nvars); }

inline HermPoly herm_mul(const HermPoly& a, const HermPoly& b) { return a * b; }

/// c'(alpha, beta) = conj(c(beta, alpha)).
inline HermPoly herm_conjugate(const HermPoly& a) {
  const std::size_t n = a.nvars();
  HermPoly r(n);
  for (const auto& [k, c] : a.terms()) r.add_term(concat(beta_of(k, n), alpha_of(k, n)), c.conj());
  return r;
}

inline bool is_hermitian_symmetric(const HermPoly& a) { return herm_conjugate(a) == a; }

/// f(z) * conj(g(z)).
inline HermPoly outer(const HoloPoly& f, const HoloPoly& g) {
  f.check_compatible(g);
  HermPoly r(f.nvars());
  for (const auto& [ka, ca] : f.terms()) {
    for (const auto& [kb, cb] : g.terms()) r.add_term(concat(ka, kb), ca * cb.conj());
  }
  return r;
}

inline HermPoly squared_modulus(const HoloPoly& p) { return outer(p, p); }

/// ||z||^2 = sum_j |z_j|^2.
inline HermPoly norm_squared(std::size_t n) {
  HermPoly r(n);
  for (std::size_t j = 0; j < n; ++j) {
    const MultiIndex e = MultiIndex::unit(n, j);
    r.add_term(concat(e, e), 1);
  }
  return r;
}

/// ||z||^{2k}.
inline HermPoly norm_power(std::size_t n, int k) { return norm_squared(n).pow(k); }

/// (1 + ||z||^2)^d.
inline HermPoly pfister_base(std::size_t n, int d) {
  return (HermPoly::constant(n, 1) + norm_squared(n)).pow(d);
}

/// Largest |alpha| and |beta| over the terms; (-1, -1) for zero.
inline std::pair<int, int> bidegree(const HermPoly& a) {
  const std::size_t n = a.nvars();
  int da = -1, db = -1;
  for (const auto& [k, c] : a.terms()) {
    da = std::max(da, alpha_of(k, n).total());
    db = std::max(db, beta_of(k, n).total());
  }
  return {da, db};
}

/// Add z_{n+1} so every term z^a zbar^b becomes bidegree (d, d).
inline HermPoly bihomogenize(const HermPoly& a, int d) {
  if (d < 0) throw std::invalid_argument("bihomogenize: negative degree");
  const std::size_t n = a.nvars();
  const auto [da, db] = bidegree(a);
  if (da > d || db > d) throw std::invalid_argument("bihomogenize: bidegree exceeds d");
  HermPoly r(n + 1);
  for (const auto& [k, c] : a.terms()) {
    const MultiIndex al = alpha_of(k, n), be = beta_of(k, n);
    r.add_term(concat(al.insert(n, d - al.total()), be.insert(n, d - be.total())), c);
  }
  return r;
}

/// Set z_var = zbar_var = 1, removing that variable.
inline HermPoly dehomogenize(const HermPoly& a, std::size_t var) {
  const std::size_t n = a.nvars();
  if (var >= n) throw std::out_of_range("dehomogenize: variable index out of range");
  if (n == 1) throw std::invalid_argument("dehomogenize: cannot remove the only variable");
  HermPoly r(n - 1);
  for (const auto& [k, c] : a.terms()) {
    r.add_term(concat(alpha_of(k, n).erase(var), beta_of(k, n).erase(var)), c);
  }
  return r;
}

/// Terms of minimal total degree |alpha| + |beta|.
inline HermPoly lowest_part(const HermPoly& a) {
  if (a.is_zero()) throw std::domain_error("lowest_part of zero polynomial");
  int lo = std::numeric_limits<int>::max();
  for (const auto& [k, c] : a.terms()) lo = std::min(lo, k.total());
  HermPoly r(a.nvars());
  for (const auto& [k, c] : a.terms()) {
    if (k.total() == lo) r.add_term(k, c);
  }
  return r;
}

/// Rewrite a diagonal Hermitian polynomial in x_j = |z_j|^2.
inline DiagPoly to_diagonal(const HermPoly& a) {
  const std::size_t n = a.nvars();
  DiagPoly r(n);
  for (const auto& [k, c] : a.terms()) {
    const MultiIndex al = alpha_of(k, n);
    if (al != beta_of(k, n)) throw std::invalid_argument("to_diagonal: off-diagonal term");
    if (!c.is_real()) throw std::invalid_argument("to_diagonal: non-real diagonal entry");
    r.add_term(al, c);
  }
  return r;
}

/// Inverse of to_diagonal: x^g -> z^g zbar^g.
inline HermPoly from_diagonal(const DiagPoly& p) {
  HermPoly r(p.nvars());
  for (const auto& [k, c] : p.terms()) r.add_term(concat(k, k), c);
  return r;
}

/// sum_j x_j as a real polynomial.
inline DiagPoly coordinate_sum(std::size_t n) {
  DiagPoly r(n);
  for (std::size_t j = 0; j < n; ++j) r.add_term(MultiIndex::unit(n, j), 1);
  return r;
}

/// M(n,d) = binom(n+d, d) and N(n,d) = binom(n+d-1, d).
struct Dims {
  Integer M;
  Integer N;
};

inline Dims dims(long n, long d) {
  if (n < 1 || d < 0) throw std::invalid_argument("dims: need n >= 1, d >= 0");
  return {binomial(n + d, d), binomial(n + d - 1, d)};
}

// ---------------------------------------------------------------------------
// Printing in the human text grammar: "3/2 z1^2 zb1 - (1/2+1 i) z2".

namespace detail {
inline void print_power(std::ostream& os, const char* name, std::size_t idx, int e, bool& first) {
  if (e == 0) return;
  if (!first) os << ' ';
  first = false;
  os << name << (idx + 1);
  if (e > 1) os << '^' << e;
}

template <class Kind>
void print_monomial(std::ostream& os, const MultiIndex& key, std::size_t nvars, bool& first, const char* zname) {
  for (std::size_t j = 0; j < nvars; ++j) print_power(os, zname, j, key[j], first);
  if constexpr (Kind::slots == 2) {
    for (std::size_t j = 0; j < nvars; ++j) print_power(os, "zb", j, key[nvars + j], first);
  }
}
}  // namespace detail

/// Write p in the text grammar. `var` overrides the holomorphic variable
/// name (default x for diagonal polynomials, z otherwise).
template <class Kind>
std::ostream& write_text(std::ostream& os, const Polynomial<Kind>& p, const char* var = nullptr) {
  if (!var) var = std::is_same_v<Kind, DiagonalKind> ? "x" : "z";
  if (p.is_zero()) return os << '0';
  bool lead = true;
  for (const auto& [k, c] : p.terms()) {
    GaussianRational coef = c;
    const bool negative = c.is_real() ? c.re() < 0 : (c.re() < 0 || (c.re() == 0 && c.im() < 0));
    if (negative) coef = -coef;
    if (lead) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    lead = false;
    const bool is_const = k.is_zero();
    bool first = true;
    if (is_const || !(coef == GaussianRational(1))) {
      os << coef;
      first = false;
    }
    detail::print_monomial<Kind>(os, k, p.nvars(), first, var);
  }
  return os;
}

template <class Kind>
std::ostream& operator<<(std::ostream& os, const Polynomial<Kind>& p) {
  return write_text(os, p);
}

}  // namespace hermsos
