#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hermsos/polynomial.hpp"

namespace hermsos {

/// Reproducible recipe for random instances: identical specs draw identical
/// polynomials. Coefficients come from a small pool: numerators in
/// [num_lo, num_hi], denominators from `dens`, independently for the real and
/// imaginary parts. Each candidate monomial is present with probability 1/2.
struct RandomSpec {
  std::uint64_t seed = 0;
  std::size_t nvars = 1;
  int max_degree = 2;
  int num_lo = -3;
  int num_hi = 3;
  std::vector<int> dens{1, 2};
};

/// Deterministic generator; uses only the raw mt19937_64 stream so draws do
/// not depend on the standard library's distribution implementations.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(const RandomSpec& spec) : spec_(spec), rng_(spec.seed) {}

  const RandomSpec& spec() const { return spec_; }

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  bool coin() { return below(2) == 1; }

  Rational rational() {
    const auto span = static_cast<std::uint64_t>(spec_.num_hi - spec_.num_lo + 1);
    const long num = spec_.num_lo + static_cast<long>(below(span));
    const long den = spec_.dens[below(spec_.dens.size())];
    return make_rational(num, den);
  }

  GaussianRational coefficient(bool real_only) {
    Rational re = rational();
    if (real_only) return GaussianRational(re);
    Rational im = rational();
    return {std::move(re), std::move(im)};
  }

  /// Holomorphic polynomial with terms of total degree in [lo, hi].
  HoloPoly holo(std::size_t n, int lo, int hi) {
    HoloPoly p(n);
    for (const auto& m : monomials_up_to(n, lo, hi)) {
      if (coin()) p.add_term(m, coefficient(false));
    }
    return p;
  }

  /// Real homogeneous polynomial of degree `deg` in n variables.
  DiagPoly homogeneous_real(std::size_t n, int deg) {
    DiagPoly p(n);
    for (const auto& m : monomials_of_degree(n, deg)) {
      if (coin()) p.add_term(m, coefficient(true));
    }
    return p;
  }

  /// General (not necessarily Hermitian) polynomial in (z, zbar) with
  /// |alpha| + |beta| <= max_total.
  HermPoly herm(std::size_t n, int max_total) {
    HermPoly p(n);
    for (const auto& key : monomials_up_to(2 * n, 0, max_total)) {
      if (coin()) p.add_term(key, coefficient(false));
    }
    return p;
  }

  /// Redraw until `draw` yields a nonzero polynomial.
  template <class Draw>
  auto nonzero(Draw&& draw) {
    for (;;) {
      auto p = draw(*this);
      if (!p.is_zero()) return p;
    }
  }

 private:
  RandomSpec spec_;
  std::mt19937_64 rng_;
};

}  // namespace hermsos
