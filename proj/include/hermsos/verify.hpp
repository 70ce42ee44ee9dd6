#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hermsos/coeff_matrix.hpp"
#include "hermsos/divide.hpp"
#include "hermsos/errors.hpp"
#include "hermsos/polynomial.hpp"
#include "hermsos/random.hpp"

namespace hermsos {

enum class Theorem {
  PfisterRank,          // rank(s * (1+||z||^2)^d) >= M(n,d)
  DiagonalTermCount,    // termcount((sum x)^d q) >= N(n,d)
  UnivariateTermCount,  // termcount((1+x)^d q) >= d+1
  Descent,              // derivative identity and term-count drop
  Huang,                // multiples of ||z||^2 have rank >= n
  SliceInvariance,      // slices commute with the Pfister factor
  ExtremalSlice,        // extremal slice size <= rank
  LprimeMinors,         // square submatrices of L' are invertible
};

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::PfisterRank: return "pfister_rank";
    case Theorem::DiagonalTermCount: return "diagonal_term_count";
    case Theorem::UnivariateTermCount: return "univariate_term_count";
    case Theorem::Descent: return "descent";
    case Theorem::Huang: return "huang";
    case Theorem::SliceInvariance: return "slice_invariance";
    case Theorem::ExtremalSlice: return "extremal_slice";
    case Theorem::LprimeMinors: return "lprime_minors";
  }
  return "unknown";
}

/// Outcome of one verification trial. `pass` holds iff observed >= bound (and
/// any auxiliary assertion held) or the instance was zero and skipped.
struct TrialReport {
  Theorem theorem = Theorem::PfisterRank;
  std::size_t n = 0;
  long d = 0;
  std::uint64_t seed = 0;
  int multiplier_degree = -1;
  std::size_t observed = 0;
  std::size_t bound = 0;
  bool skipped = false;
  bool pass = true;
  std::string note{};
};

inline std::size_t to_size(const Integer& v) { return static_cast<std::size_t>(v.get_ui()); }

// ---------------------------------------------------------------------------
// Pfister rank bound

inline TrialReport check_pfister_rank(std::size_t n, int d, const HermPoly& s, std::uint64_t seed = 0) {
  TrialReport r{Theorem::PfisterRank, n, d, seed, s.total_degree()};
  r.bound = to_size(dims(static_cast<long>(n), d).M);
  if (s.is_zero()) {
    r.skipped = true;
    return r;
  }
  r.observed = exact_rank(s * pfister_base(n, d));
  r.pass = r.observed >= r.bound;
  return r;
}

inline TrialReport check_pfister_rank(std::size_t n, int d, const RandomSpec& spec) {
  InstanceGenerator gen(spec);
  HermPoly s = gen.nonzero([&](InstanceGenerator& g) { return g.herm(n, spec.max_degree); });
  return check_pfister_rank(n, d, s, spec.seed);
}

// ---------------------------------------------------------------------------
// Diagonal case: induction machinery

/// A_j(y) with p = x^shift * sum_j A_j(y) x^j, plus the checks on the
/// minimally chosen nonzero indices 0 = j_0 < j_1 < ... < j_d.
struct XCoefficients {
  int shift = 0;
  std::vector<DiagPoly> A;
  std::vector<std::size_t> chosen;
  std::size_t nonzero = 0;
  bool count_ok = false;
  bool divisibility_ok = false;
};

/// p is a polynomial in (y_1..y_n, x) with x the last variable, homogeneous
/// and divisible by (x + s)^d for s = y_1 + ... + y_n.
inline XCoefficients extract_x_coefficients(const DiagPoly& p, int d) {
  const std::size_t total = p.nvars();
  if (total < 2) throw std::invalid_argument("extract_x_coefficients: need at least one y variable");
  if (d < 0) throw std::invalid_argument("extract_x_coefficients: negative d");
  if (p.is_zero()) throw std::invalid_argument("extract_x_coefficients: zero polynomial");
  const std::size_t n = total - 1;
  const int deg = p.terms().begin()->first.total();
  for (const auto& [k, c] : p.terms()) {
    if (k.total() != deg) throw std::invalid_argument("extract_x_coefficients: p is not homogeneous");
  }
  DiagPoly x_plus_s = coordinate_sum(total);
  if (!divides(x_plus_s.pow(d), p)) {
    throw MathError(MathError::Kind::NotDivisible, "extract_x_coefficients: (x+s)^d does not divide p");
  }

  XCoefficients out;
  out.shift = std::numeric_limits<int>::max();
  for (const auto& [k, c] : p.terms()) out.shift = std::min(out.shift, k[n]);
  int top = 0;
  for (const auto& [k, c] : p.terms()) top = std::max(top, k[n] - out.shift);
  out.A.assign(static_cast<std::size_t>(top) + 1, DiagPoly(n));
  for (const auto& [k, c] : p.terms()) out.A[static_cast<std::size_t>(k[n] - out.shift)].add_term(k.erase(n), c);

  for (std::size_t j = 0; j < out.A.size(); ++j) {
    if (out.A[j].is_zero()) continue;
    ++out.nonzero;
    if (out.chosen.size() < static_cast<std::size_t>(d) + 1) out.chosen.push_back(j);
  }
  out.count_ok = out.nonzero >= static_cast<std::size_t>(d) + 1;
  out.divisibility_ok = true;
  const DiagPoly s = coordinate_sum(n);
  for (std::size_t k = 0; k < out.chosen.size(); ++k) {
    if (!divides(s.pow(d - static_cast<int>(k)), out.A[out.chosen[k]])) out.divisibility_ok = false;
  }
  return out;
}

inline TrialReport check_diagonal_term_count(std::size_t n, int d, const DiagPoly& q, std::uint64_t seed = 0) {
  TrialReport r{Theorem::DiagonalTermCount, n, d, seed, q.total_degree()};
  r.bound = to_size(dims(static_cast<long>(n), d).N);
  const DiagPoly p = coordinate_sum(n).pow(d) * q;
  if (p.is_zero()) {
    r.skipped = true;
    return r;
  }
  r.observed = p.term_count();
  r.pass = r.observed >= r.bound;
  if (n >= 2) {
    const XCoefficients xc = extract_x_coefficients(p, d);
    if (!xc.count_ok) {
      r.pass = false;
      r.note = "fewer than d+1 nonzero A_j";
    } else if (!xc.divisibility_ok) {
      r.pass = false;
      r.note = "s^(d-k) does not divide A_(j_k)";
    }
  }
  return r;
}

inline TrialReport check_diagonal_term_count(std::size_t n, int d, const RandomSpec& spec) {
  InstanceGenerator gen(spec);
  const int deg = static_cast<int>(gen.below(static_cast<std::uint64_t>(spec.max_degree) + 1));
  DiagPoly q = gen.nonzero([&](InstanceGenerator& g) { return g.homogeneous_real(n, deg); });
  return check_diagonal_term_count(n, d, q, spec.seed);
}

inline TrialReport check_univariate(int d, const HoloPoly& q, std::uint64_t seed = 0) {
  require_univariate(q);
  TrialReport r{Theorem::UnivariateTermCount, 1, d, seed, q.total_degree()};
  r.bound = static_cast<std::size_t>(d) + 1;
  const HoloPoly p = one_plus_x().pow(d) * q;
  if (p.is_zero()) {
    r.skipped = true;
    return r;
  }
  r.observed = p.term_count();
  r.pass = r.observed >= r.bound;
  return r;
}

inline TrialReport check_univariate(int d, const RandomSpec& spec) {
  InstanceGenerator gen(spec);
  HoloPoly q = gen.nonzero([&](InstanceGenerator& g) { return g.holo(1, 0, spec.max_degree); });
  return check_univariate(d, q, spec.seed);
}

/// Exact check of d/dx[(1+x)^d q] = (1+x)^{d-1} q_next, and that
/// differentiation drops at least one term when the product has a constant
/// term. `q` is normalized by stripping its power of x first.
inline TrialReport check_descent(int d, const HoloPoly& q_in, std::uint64_t seed = 0) {
  TrialReport r{Theorem::Descent, 1, d, seed, q_in.total_degree()};
  r.bound = 1;
  if (q_in.is_zero()) {
    r.skipped = true;
    return r;
  }
  const HoloPoly q = strip_x_power(q_in);
  const HoloPoly product = one_plus_x().pow(d) * q;
  const DescentStep step = descent_step(q, d);
  const HoloPoly lhs = derivative(product);
  const bool identity = lhs == one_plus_x().pow(step.d_next) * step.q_next;
  r.observed = product.term_count() - lhs.term_count();
  r.pass = identity && r.observed >= r.bound;
  if (!identity) r.note = "derivative identity failed";
  return r;
}

inline TrialReport check_descent(const RandomSpec& spec) {
  InstanceGenerator gen(spec);
  const int d = 1 + static_cast<int>(gen.below(4));
  HoloPoly q = gen.nonzero([&](InstanceGenerator& g) { return g.holo(1, 0, spec.max_degree); });
  return check_descent(d, q, spec.seed);
}

// ---------------------------------------------------------------------------
// Huang's lemma (d = 1)

/// `pairs` are (f_j, g_j) vanishing at 0. Fails if sum f_j conj(g_j) is a
/// nonzero multiple of ||z||^2 with fewer than n pairs, or if the
/// constructed multiple ||z||^2 * u has rank below n.
inline TrialReport check_huang(std::size_t n, const std::vector<std::pair<HoloPoly, HoloPoly>>& pairs,
                               const HermPoly& u, std::uint64_t seed = 0) {
  TrialReport r{Theorem::Huang, n, 1, seed, u.total_degree()};
  r.bound = n;
  HermPoly sum(n);
  for (const auto& [f, g] : pairs) sum += outer(f, g);
  if (pairs.size() < n && !sum.is_zero() && is_norm_power_multiple(sum, 1)) {
    r.pass = false;
    r.note = "nonzero multiple of ||z||^2 with fewer than n terms";
  }
  if (u.is_zero()) {
    r.skipped = r.pass;
    return r;
  }
  r.observed = exact_rank(norm_squared(n) * u);
  r.pass = r.pass && r.observed >= r.bound;
  return r;
}

inline TrialReport check_huang(std::size_t n, const RandomSpec& spec) {
  if (n < 1) throw std::invalid_argument("check_huang: n must be positive");
  InstanceGenerator gen(spec);
  const std::size_t k = n > 1 ? 1 + gen.below(n - 1) : 0;
  std::vector<std::pair<HoloPoly, HoloPoly>> pairs;
  const int hi = std::max(1, spec.max_degree);
  for (std::size_t j = 0; j < k; ++j) {
    HoloPoly f = gen.holo(n, 1, hi);
    HoloPoly g = gen.holo(n, 1, hi);
    pairs.emplace_back(std::move(f), std::move(g));
  }
  HermPoly u = gen.nonzero([&](InstanceGenerator& g) { return g.herm(n, spec.max_degree); });
  return check_huang(n, pairs, u, spec.seed);
}

/// Result of the exhaustive Huang search.
struct HuangSearch {
  std::size_t tuples = 0;      // f-tuples examined (each against all complex g)
  std::size_t violations = 0;  // tuples admitting a nonzero divisible sum
};

namespace detail {

/// Rank of a small integer matrix modulo a 61-bit prime.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::uint64_t P = (1ULL << 61) - 1;
  auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % P);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a)) {
      if (e & 1) r = mulmod(r, a);
    }
    return r;
  };
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t v = m[i][j] % static_cast<std::int64_t>(P);
      a[i][j] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(P) : v);
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t inv = powmod(a[rank][c], P - 2);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mulmod(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + P - mulmod(f, a[rank][j])) % P;
    }
    ++rank;
  }
  return rank;
}

inline std::size_t exact_integer_rank(const std::vector<std::vector<std::int64_t>>& m) {
  DenseMatrix<Integer> z;
  for (const auto& row : m) {
    std::vector<Integer> r;
    for (auto v : row) r.emplace_back(static_cast<long>(v));
    z.push_back(std::move(r));
  }
  return bareiss_rank(std::move(z));
}

/// Nonzero vectors over {-1,0,1}^len whose first nonzero entry is +1.
inline std::vector<std::vector<int>> normalized_grid(std::size_t len) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(len, -1);
  for (;;) {
    auto first = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (first != v.end() && *first == 1) out.push_back(v);
    std::size_t i = 0;
    while (i < len && v[i] == 1) v[i++] = -1;
    if (i == len) break;
    ++v[i];
  }
  return out;
}

}  // namespace detail

/// Search for a nonzero sum_{j<=k} f_j conj(g_j) divisible by ||z||^2 with
/// k <= max_pairs (default n-1), f_j, g_j vanishing at 0 and of degree
/// <= max_degree, f_j with coefficients in {-1,0,1}. Counts are per bidegree
/// component.
///
/// Since ||z||^2 is bihomogeneous, a sum is divisible iff each bidegree
/// component is, and the (a,b) component only involves the degree-a parts of
/// the f_j and the degree-b parts of the g_j. So it suffices to search
/// homogeneous f_j of degree a against homogeneous g_j of degree b. For fixed
/// f the sum is linear in the g coefficients: with S the map g -> sum and P
/// the remainder map modulo ||z||^2, a violation exists (for some complex g,
/// in particular for any grid g) iff rank(P S) < rank(S). The f-tuples are
/// taken as sets of distinct normalized grid vectors; scaling f_j or
/// reordering pairs is absorbed into g.
inline HuangSearch huang_exhaustive(std::size_t n, int max_degree, std::size_t max_pairs = 0) {
  HuangSearch out;
  if (n == 0) return out;
  if (max_pairs == 0) max_pairs = n - 1;
  if (max_pairs == 0) return out;
  const HermPoly divisor = norm_squared(n);
  for (int a = 1; a <= max_degree; ++a) {
    for (int b = 1; b <= max_degree; ++b) {
      const auto fa = monomials_of_degree(n, a), gb = monomials_of_degree(n, b);
      std::vector<MultiIndex> targets;
      std::map<MultiIndex, std::size_t> tpos;
      for (const auto& al : fa) {
        for (const auto& be : gb) {
          tpos[concat(al, be)] = targets.size();
          targets.push_back(concat(al, be));
        }
      }
      // P[r][t]: coefficient of target r in the remainder of target t.
      std::vector<std::vector<std::int64_t>> P(targets.size(), std::vector<std::int64_t>(targets.size(), 0));
      for (std::size_t t = 0; t < targets.size(); ++t) {
        const auto rem = divide_single(HermPoly::monomial(n, targets[t]), divisor).remainder;
        for (const auto& [key, c] : rem.terms()) P[tpos.at(key)][t] = c.re().get_num().get_si();
      }
      const auto grid = detail::normalized_grid(fa.size());
      for (std::size_t k = 1; k <= max_pairs; ++k) {
        if (grid.size() < k) break;
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        for (;;) {
          ++out.tuples;
          const std::size_t cols = k * gb.size();
          std::vector<std::vector<std::int64_t>> S(targets.size(), std::vector<std::int64_t>(cols, 0));
          for (std::size_t j = 0; j < k; ++j) {
            const auto& f = grid[pick[j]];
            for (std::size_t ai = 0; ai < fa.size(); ++ai) {
              if (f[ai] == 0) continue;
              for (std::size_t bi = 0; bi < gb.size(); ++bi) S[ai * gb.size() + bi][j * gb.size() + bi] = f[ai];
            }
          }
          std::vector<std::vector<std::int64_t>> PS(targets.size(), std::vector<std::int64_t>(cols, 0));
          for (std::size_t r = 0; r < targets.size(); ++r) {
            for (std::size_t t = 0; t < targets.size(); ++t) {
              if (P[r][t] == 0) continue;
              for (std::size_t c = 0; c < cols; ++c) PS[r][c] += P[r][t] * S[t][c];
            }
          }
          // Full column rank mod p implies full column rank over Q.
          if (detail::rank_mod_p(PS) < cols) {
            if (detail::exact_integer_rank(PS) < detail::exact_integer_rank(S)) ++out.violations;
          }
          std::size_t i = k;
          while (i > 0 && pick[i - 1] == grid.size() - k + i - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Slices

inline TrialReport check_slice_invariance(const HermPoly& a, int d, std::uint64_t seed = 0) {
  const std::size_t n = a.nvars();
  TrialReport r{Theorem::SliceInvariance, n, d, seed, a.total_degree()};
  if (a.is_zero()) {
    r.skipped = true;
    return r;
  }
  const HermPoly product = a * pfister_base(n, d);
  const DiagPoly factor = (DiagPoly::constant(n, 1) + coordinate_sum(n)).pow(d);
  std::vector<SignedOffset> offsets;
  for (const auto& s : slices(a)) offsets.push_back(s.offset);
  for (const auto& s : slices(product)) offsets.push_back(s.offset);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
  r.bound = offsets.size();
  for (const auto& off : offsets) {
    if (slice_at(product, off) == slice_times(slice_at(a, off), factor)) ++r.observed;
  }
  r.pass = r.observed >= r.bound;
  return r;
}

inline TrialReport check_slice_invariance(const RandomSpec& spec, int d) {
  InstanceGenerator gen(spec);
  HermPoly a = gen.nonzero([&](InstanceGenerator& g) { return g.herm(spec.nvars, spec.max_degree); });
  return check_slice_invariance(a, d, spec.seed);
}

/// rank >= extremal slice size, with equality required on diagonal inputs.
inline TrialReport check_extremal_slice(const HermPoly& a, std::uint64_t seed = 0) {
  TrialReport r{Theorem::ExtremalSlice, a.nvars(), 0, seed, a.total_degree()};
  if (a.is_zero()) {
    r.skipped = true;
    return r;
  }
  r.bound = extremal_slice_bound(a);
  r.observed = exact_rank(a);
  r.pass = r.observed >= r.bound;
  if (slices(a).size() == 1 && slices(a).front().offset.positive_part().is_zero() &&
      slices(a).front().offset.negative_part().is_zero() && r.observed != r.bound) {
    r.pass = false;
    r.note = "diagonal input without equality";
  }
  return r;
}

inline TrialReport check_extremal_slice(const RandomSpec& spec) {
  InstanceGenerator gen(spec);
  HermPoly a = gen.nonzero([&](InstanceGenerator& g) { return g.herm(spec.nvars, spec.max_degree); });
  return check_extremal_slice(a, spec.seed);
}

inline TrialReport check_lprime(std::size_t m, std::size_t d) {
  TrialReport r{Theorem::LprimeMinors, m, static_cast<long>(d), 0, -1};
  const LprimeReport rep = enumerate_Lprime_submatrices(m, d);
  r.observed = rep.invertible;
  r.bound = rep.submatrices;
  r.pass = rep.all_invertible();
  return r;
}

// ---------------------------------------------------------------------------
// Suite runner

struct SuiteSummary {
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
};

inline SuiteSummary summarize(const std::vector<TrialReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    ++s.trials;
    if (r.skipped) ++s.skipped;
    if (!r.pass) ++s.violations;
  }
  return s;
}

/// Run trial(base_seed + i) for i in [0, trials). Results are stored by index,
/// so the output does not depend on `threads`.
inline std::vector<TrialReport> run_trials(std::size_t trials, std::uint64_t base_seed,
                                           const std::function<TrialReport(std::uint64_t)>& trial,
                                           std::size_t threads = 1) {
  std::vector<TrialReport> out(trials);
  threads = std::max<std::size_t>(1, std::min(threads, trials));
  if (threads == 1) {
    for (std::size_t i = 0; i < trials; ++i) out[i] = trial(base_seed + i);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < trials; i += threads) out[i] = trial(base_seed + i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace hermsos
