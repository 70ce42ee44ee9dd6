#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermsos/bareiss.hpp"
#include "hermsos/polynomial.hpp"

namespace hermsos {

/// Coefficient matrix c_{alpha,beta} of a Hermitian-bidegree polynomial,
/// restricted to the alphas (rows) and betas (columns) that occur.
struct CoeffMatrix {
  std::size_t nvars = 0;
  std::vector<MultiIndex> row_index;
  std::vector<MultiIndex> col_index;
  DenseMatrix<GaussianRational> entries;

  std::size_t rows() const { return row_index.size(); }
  std::size_t cols() const { return col_index.size(); }
  const GaussianRational& operator()(std::size_t i, std::size_t j) const { return entries[i][j]; }
};

inline CoeffMatrix build_matrix(const HermPoly& a) {
  if (a.is_zero()) throw std::domain_error("build_matrix: zero polynomial has no coefficient matrix");
  const std::size_t n = a.nvars();
  std::map<MultiIndex, std::size_t> rows, cols;
  for (const auto& [k, c] : a.terms()) {
    rows.emplace(alpha_of(k, n), 0);
    cols.emplace(beta_of(k, n), 0);
  }
  CoeffMatrix m;
  m.nvars = n;
  for (auto& [idx, pos] : rows) {
    pos = m.row_index.size();
    m.row_index.push_back(idx);
  }
  for (auto& [idx, pos] : cols) {
    pos = m.col_index.size();
    m.col_index.push_back(idx);
  }
  m.entries.assign(m.rows(), std::vector<GaussianRational>(m.cols()));
  for (const auto& [k, c] : a.terms()) m.entries[rows[alpha_of(k, n)]][cols[beta_of(k, n)]] = c;
  return m;
}

/// Inverse of build_matrix.
inline HermPoly rebuild(const CoeffMatrix& m) {
  HermPoly r(m.nvars);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.add_term(concat(m.row_index[i], m.col_index[j]), m(i, j));
  }
  return r;
}

inline bool is_hermitian(const CoeffMatrix& m) {
  if (m.row_index != m.col_index) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i).conj())) return false;
    }
  }
  return true;
}

/// Clear denominators row by row; row scaling preserves rank.
inline DenseMatrix<GaussianInteger> to_gaussian_integers(const DenseMatrix<GaussianRational>& m) {
  DenseMatrix<GaussianInteger> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& c : row) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
    }
    std::vector<GaussianInteger> r;
    r.reserve(row.size());
    for (const auto& c : row) {
      Rational re = c.re() * l, im = c.im() * l;
      r.push_back({re.get_num(), im.get_num()});
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Rank over Q(i) by fraction-free elimination over Z[i].
inline std::size_t exact_rank(const CoeffMatrix& m) {
  return bareiss_rank(to_gaussian_integers(m.entries));
}

/// Rank of a polynomial's coefficient matrix; 0 for the zero polynomial.
inline std::size_t exact_rank(const HermPoly& a) {
  return a.is_zero() ? 0 : exact_rank(build_matrix(a));
}

namespace detail {
inline std::string monomial_label(const MultiIndex& e, const char* var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << var << (j + 1);
    if (e[j] > 1) os << '^' << e[j];
  }
  return first ? std::string("1") : os.str();
}
}  // namespace detail

/// Textual grid with monomial row/column headers.
inline std::string render_grid(const CoeffMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.rows() + 1, std::vector<std::string>(m.cols() + 1));
  for (std::size_t j = 0; j < m.cols(); ++j) cells[0][j + 1] = detail::monomial_label(m.col_index[j], "zb");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    cells[i + 1][0] = detail::monomial_label(m.row_index[i], "z");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::ostringstream os;
      os << m(i, j);
      cells[i + 1][j + 1] = os.str();
    }
  }
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      os << (j ? "  " : "") << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Diagonal-offset slices

/// One diagonal of the coefficient matrix: all c(gamma + delta+, gamma + delta-)
/// collected as sum_gamma c x^gamma. Off-diagonal slices of a Hermitian
/// polynomial can carry non-real coefficients, so the slice polynomial is
/// complex-valued in x.
struct Slice {
  SignedOffset offset;
  HoloPoly poly;
};

inline std::vector<Slice> slices(const HermPoly& a) {
  if (a.is_zero()) throw std::domain_error("slices: zero polynomial");
  const std::size_t n = a.nvars();
  std::map<SignedOffset, HoloPoly> acc;
  for (const auto& [k, c] : a.terms()) {
    const MultiIndex mu = alpha_of(k, n), nu = beta_of(k, n);
    auto it = acc.try_emplace(SignedOffset::between(mu, nu), HoloPoly(n)).first;
    it->second.add_term(min(mu, nu), c);
  }
  std::vector<Slice> out;
  out.reserve(acc.size());
  for (auto& [off, p] : acc) out.push_back({off, std::move(p)});
  return out;
}

/// Slice for one offset (zero polynomial when that diagonal is empty).
inline HoloPoly slice_at(const HermPoly& a, const SignedOffset& delta) {
  const std::size_t n = a.nvars();
  HoloPoly p(n);
  for (const auto& [k, c] : a.terms()) {
    const MultiIndex mu = alpha_of(k, n), nu = beta_of(k, n);
    if (SignedOffset::between(mu, nu) == delta) p.add_term(min(mu, nu), c);
  }
  return p;
}

/// sum_delta z^{delta+} zbar^{delta-} slice_delta(|z_1|^2, ...).
inline HermPoly reassemble(const std::vector<Slice>& parts, std::size_t nvars) {
  HermPoly r(nvars);
  for (const auto& s : parts) {
    const MultiIndex plus = s.offset.positive_part(), minus = s.offset.negative_part();
    for (const auto& [g, c] : s.poly.terms()) r.add_term(concat(g + plus, g + minus), c);
  }
  return r;
}

/// Number of nonzero monomials in the slice with lex-largest offset. This is
/// a lower bound for the rank: the rows alpha = gamma + delta+ of that slice
/// are triangular against the columns gamma + delta-.
inline std::size_t extremal_slice_bound(const HermPoly& a) {
  return slices(a).back().poly.term_count();
}

/// Multiply each x-slice by a real polynomial (acts on every offset alike).
inline HoloPoly slice_times(const HoloPoly& p, const DiagPoly& q) {
  HoloPoly r(p.nvars());
  for (const auto& [ka, ca] : p.terms()) {
    for (const auto& [kb, cb] : q.terms()) r.add_term(ka + kb, ca * cb);
  }
  return r;
}

}  // namespace hermsos
