#include <gtest/gtest.h>

#include "hermsos/io.hpp"
#include "hermsos/verify.hpp"
#include "oracles.hpp"

namespace hermsos {
namespace {

HermPoly H(const char* text, std::size_t n = 0) { return parse_text<HermitianKind>(text, n); }
HoloPoly Z(const char* text, std::size_t n = 0) { return parse_text<HolomorphicKind>(text, n); }
DiagPoly D(const char* text, std::size_t n = 0) { return parse_text<DiagonalKind>(text, n); }

TEST(PfisterRankCheck, Examples) {
  TrialReport r = check_pfister_rank(1, 3, HermPoly::constant(1, 1));
  EXPECT_EQ(r.observed, 4u);
  EXPECT_EQ(r.bound, 4u);
  EXPECT_TRUE(r.pass);

  r = check_pfister_rank(1, 2, H("z1 zb1"));
  EXPECT_EQ(r.observed, 3u);
  EXPECT_TRUE(r.pass);

  r = check_pfister_rank(2, 2, HermPoly(2));
  EXPECT_TRUE(r.skipped);
  EXPECT_TRUE(r.pass);
}

TEST(PfisterRankCheck, RandomMultipliers) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const TrialReport r = check_pfister_rank(2, 2, RandomSpec{seed, 2, 3});
    EXPECT_TRUE(r.pass) << "seed " << seed;
    EXPECT_FALSE(r.skipped);
    EXPECT_GE(r.observed, 6u);
  }
}

TEST(DiagonalTermCount, Examples) {
  TrialReport r = check_diagonal_term_count(2, 2, DiagPoly::constant(2, 1));
  EXPECT_EQ(r.observed, 3u);
  EXPECT_EQ(r.bound, 3u);
  EXPECT_TRUE(r.pass);

  for (int d = 0; d <= 4; ++d) {
    r = check_diagonal_term_count(1, d, D("3 x1^2", 1));
    EXPECT_GE(r.observed, 1u);
    EXPECT_TRUE(r.pass);
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    r = check_diagonal_term_count(3, 2, RandomSpec{seed, 3, 3});
    EXPECT_GE(r.observed, 6u);
    EXPECT_TRUE(r.pass) << r.note;
  }
  EXPECT_TRUE(check_diagonal_term_count(2, 1, DiagPoly(2)).skipped);
}

TEST(ExtractX, HandExpansion) {
  // p = (x + y)^2 in variables (y, x); d = 1.
  const DiagPoly p = D("x1^2 + 2 x1 x2 + x2^2");
  const XCoefficients xc = extract_x_coefficients(p, 1);
  EXPECT_EQ(xc.shift, 0);
  ASSERT_EQ(xc.A.size(), 3u);
  EXPECT_EQ(xc.A[0], D("x1^2"));
  EXPECT_EQ(xc.A[1], D("2 x1"));
  EXPECT_EQ(xc.A[2], DiagPoly::constant(1, 1));
  EXPECT_TRUE(xc.count_ok);
  EXPECT_TRUE(xc.divisibility_ok);
  EXPECT_EQ(xc.chosen, (std::vector<std::size_t>{0, 1}));
}

TEST(ExtractX, BinomialExpansion) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 4; ++d) {
      const XCoefficients xc = extract_x_coefficients(coordinate_sum(n + 1).pow(d), d);
      ASSERT_EQ(xc.A.size(), static_cast<std::size_t>(d) + 1);
      for (int j = 0; j <= d; ++j) {
        const DiagPoly want = coordinate_sum(n).pow(d - j) * GaussianRational(Rational(binomial(d, j)));
        EXPECT_EQ(xc.A[static_cast<std::size_t>(j)], want);
      }
      EXPECT_EQ(xc.nonzero, static_cast<std::size_t>(d) + 1);
      EXPECT_TRUE(xc.count_ok && xc.divisibility_ok);
    }
  }
}

TEST(ExtractX, NormalizesPowerOfX) {
  // x * (x + y): divide out x first.
  const XCoefficients xc = extract_x_coefficients(D("x2^2 + x1 x2"), 1);
  EXPECT_EQ(xc.shift, 1);
  EXPECT_FALSE(xc.A[0].is_zero());
  EXPECT_TRUE(xc.count_ok && xc.divisibility_ok);
}

TEST(ExtractX, Errors) {
  EXPECT_THROW(extract_x_coefficients(D("x1 + x2^2"), 0), std::invalid_argument);
  EXPECT_THROW(extract_x_coefficients(D("x1^2", 2), 1), MathError);
  EXPECT_THROW(extract_x_coefficients(D("x1", 1), 1), std::invalid_argument);
}

TEST(ExtractX, VanishingMiddleCoefficients) {
  // (x + y)^d (y - d x) has A_1 = 0, so the chosen indices skip j = 1.
  for (int d = 1; d <= 4; ++d) {
    const DiagPoly h = D("x1", 2) - D("x2", 2) * GaussianRational(d);
    const XCoefficients xc = extract_x_coefficients(coordinate_sum(2).pow(d) * h, d);
    EXPECT_TRUE(xc.A[1].is_zero()) << "d=" << d;
    EXPECT_EQ(xc.chosen[1], 2u);
    EXPECT_TRUE(xc.count_ok) << "d=" << d;
    EXPECT_TRUE(xc.divisibility_ok) << "d=" << d;
  }
}

TEST(ExtractX, HoldsOnRandomMultiples) {
  // Sparse random cofactors make vanishing A_j more likely.
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t ny = 1 + seed % 2;
    const int d = 1 + static_cast<int>(seed % 3);
    InstanceGenerator gen({seed, ny + 1, 3, -2, 2, {1}});
    const int deg = static_cast<int>(gen.below(4));
    const DiagPoly h = gen.nonzero([&](InstanceGenerator& g) { return g.homogeneous_real(ny + 1, deg); });
    const XCoefficients xc = extract_x_coefficients(coordinate_sum(ny + 1).pow(d) * h, d);
    EXPECT_TRUE(xc.count_ok) << "seed " << seed;
    EXPECT_TRUE(xc.divisibility_ok) << "seed " << seed;
  }
}

TEST(UnivariateCheck, Examples) {
  EXPECT_EQ(check_univariate(3, HoloPoly::constant(1, 1)).observed, 4u);
  EXPECT_TRUE(check_univariate(2, HoloPoly(1)).skipped);
  EXPECT_TRUE(check_univariate(4, Z("1 - z1", 1)).pass);
}

TEST(DescentCheck, Examples) {
  TrialReport r = check_descent(2, HoloPoly::constant(1, 1));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.observed, 1u);
  r = check_descent(1, Z("z1^2 + z1^3", 1));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(check_descent(1, HoloPoly(1)).skipped);
}

TEST(HuangCheck, Examples) {
  const HermPoly u = H("z1", 2);
  EXPECT_EQ(exact_rank(norm_squared(2) * u), 2u);
  EXPECT_EQ(exact_rank(norm_squared(3)), 3u);

  TrialReport r = check_huang(2, {{Z("z1", 2), Z("z1", 2)}}, u);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.observed, 2u);

  // Two pairs may produce ||z||^2 itself, but that needs k = n.
  r = check_huang(2, {{Z("z1", 2), Z("z1", 2)}, {Z("z2", 2), Z("z2", 2)}}, u);
  EXPECT_TRUE(r.pass);
}

TEST(HuangCheck, RandomTrials) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 2;
    const TrialReport r = check_huang(n, RandomSpec{seed, n, 2});
    EXPECT_TRUE(r.pass) << "seed " << seed << " " << r.note;
    EXPECT_GE(r.observed, n);
  }
}

TEST(HuangExhaustive, PositiveControlWithEnoughPairs) {
  // With k = n = 2 linear pairs, every independent pair of grid forms admits
  // a divisible sum (g from the adjugate), and the search must see it.
  const HuangSearch s = huang_exhaustive(2, 1, 2);
  // 4 normalized linear forms: 4 singletons and 6 pairs.
  EXPECT_EQ(s.tuples, 10u);
  EXPECT_EQ(s.violations, 6u);

  std::size_t brute = 0;
  const auto forms = detail::normalized_grid(2);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      bool found = false;
      oracle::for_each_grid_poly(2, 1, [&](const HoloPoly& g1) {
        oracle::for_each_grid_poly(2, 1, [&](const HoloPoly& g2) {
          HoloPoly f1(2), f2(2);
          f1.add_term(MultiIndex{1, 0}, forms[i][0]);
          f1.add_term(MultiIndex{0, 1}, forms[i][1]);
          f2.add_term(MultiIndex{1, 0}, forms[j][0]);
          f2.add_term(MultiIndex{0, 1}, forms[j][1]);
          const HermPoly sum = outer(f1, g1) + outer(f2, g2);
          if (!sum.is_zero() && is_norm_power_multiple(sum, 1)) found = true;
        });
      });
      brute += found ? 1 : 0;
    }
  }
  EXPECT_EQ(brute, 6u);
}

TEST(HuangExhaustive, TwoVariablesAgreesWithGridBruteForce) {
  const HuangSearch s = huang_exhaustive(2, 2);
  EXPECT_GT(s.tuples, 0u);
  EXPECT_EQ(s.violations, 0u);
  std::size_t brute = 0;
  oracle::for_each_grid_poly(2, 2, [&](const HoloPoly& f) {
    if (f.is_zero()) return;
    oracle::for_each_grid_poly(2, 2, [&](const HoloPoly& g) {
      const HermPoly sum = outer(f, g);
      if (!sum.is_zero() && is_norm_power_multiple(sum, 1)) ++brute;
    });
  });
  EXPECT_EQ(brute, 0u);
}

TEST(SliceCheck, Examples) {
  TrialReport r = check_slice_invariance(H("z1 zb2"), 1);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.bound, 1u);
  EXPECT_TRUE(check_slice_invariance(HermPoly(2), 1).skipped);
  r = check_slice_invariance(H("1 + 3 z1 zb1"), 2);
  EXPECT_TRUE(r.pass);
}

TEST(ExtremalCheck, DiagonalInputsAttainEquality) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 3;
    InstanceGenerator gen({seed, n, 3});
    const DiagPoly q = gen.nonzero([&](InstanceGenerator& g) {
      DiagPoly p(n);
      for (const auto& m : monomials_up_to(n, 0, 3)) {
        if (g.coin()) p.add_term(m, g.coefficient(true));
      }
      return p;
    });
    const TrialReport r = check_extremal_slice(from_diagonal(q));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.observed, r.bound);
    EXPECT_EQ(r.observed, q.term_count());
  }
}

TEST(LprimeCheck, Report) {
  const TrialReport r = check_lprime(1, 1);
  EXPECT_EQ(r.bound, 3u);
  EXPECT_EQ(r.observed, 3u);
  EXPECT_TRUE(r.pass);
}

TEST(RunTrials, IndependentOfThreadCount) {
  auto trial = [](std::uint64_t seed) { return check_pfister_rank(1, 2, RandomSpec{seed, 1, 3}); };
  const auto a = run_trials(24, 1000, trial, 1);
  const auto b = run_trials(24, 1000, trial, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].seed, 1000 + i);
    EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
  }
  const SuiteSummary s = summarize(a);
  EXPECT_EQ(s.trials, 24u);
  EXPECT_EQ(s.violations, 0u);
}

TEST(RunTrials, PropagatesExceptions) {
  auto trial = [](std::uint64_t seed) -> TrialReport {
    if (seed == 3) throw std::runtime_error("boom");
    return {};
  };
  EXPECT_THROW(run_trials(8, 0, trial, 3), std::runtime_error);
}

TEST(Reports, ReproducibleFromSpec) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RandomSpec spec{seed, 2, 3};
    EXPECT_EQ(to_json(check_slice_invariance(spec, 1)).dump(), to_json(check_slice_invariance(spec, 1)).dump());
    EXPECT_EQ(to_json(check_extremal_slice(spec)).dump(), to_json(check_extremal_slice(spec)).dump());
  }
}

}  // namespace
}  // namespace hermsos
