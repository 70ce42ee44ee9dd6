#include <gtest/gtest.h>

#include <random>

#include "hermsos/io.hpp"
#include "hermsos/polynomial.hpp"
#include "hermsos/random.hpp"
#include "oracles.hpp"

namespace hermsos {
namespace {

HermPoly H(const char* text, std::size_t n = 0) { return parse_text<HermitianKind>(text, n); }

TEST(GaussianRational, CanonicalForm) {
  GaussianRational a(make_rational(2, 4), make_rational(-3, -6));
  EXPECT_EQ(a.re().get_num(), 1);
  EXPECT_EQ(a.re().get_den(), 2);
  EXPECT_EQ(a.im().get_den(), 2);
  GaussianRational z = a - a;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.re().get_den(), 1);
  EXPECT_EQ(z.im().get_den(), 1);
  EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
  EXPECT_EQ((a / a), GaussianRational(1));
  EXPECT_THROW(a / GaussianRational(), std::domain_error);
}

TEST(HermMul, Examples) {
  EXPECT_EQ(herm_mul(H("1 + z1 zb1"), H("1 + z1 zb1")), H("1 + 2 z1 zb1 + z1^2 zb1^2"));
  EXPECT_TRUE(herm_mul(H("3 z1 + zb1"), HermPoly(1)).is_zero());

  // Hand expansion of (1 + |z1|^2 + |z2|^2)^2.
  const HermPoly sq = herm_mul(H("1 + z1 zb1 + z2 zb2"), H("1 + z1 zb1 + z2 zb2"));
  HermPoly expected(2);
  expected.add_term(MultiIndex{0, 0, 0, 0}, 1);
  expected.add_term(MultiIndex{1, 0, 1, 0}, 2);
  expected.add_term(MultiIndex{0, 1, 0, 1}, 2);
  expected.add_term(MultiIndex{2, 0, 2, 0}, 1);
  expected.add_term(MultiIndex{1, 1, 1, 1}, 2);
  expected.add_term(MultiIndex{0, 2, 0, 2}, 1);
  EXPECT_EQ(sq, expected);
  EXPECT_EQ(sq.term_count(), 6u);
}

TEST(HermMul, VariableCountMismatch) {
  EXPECT_THROW(herm_mul(HermPoly::constant(1, 1), HermPoly::constant(2, 1)), std::invalid_argument);
  EXPECT_THROW(HermPoly::constant(1, 1) + HermPoly::constant(2, 1), std::invalid_argument);
}

TEST(HermConjugate, Examples) {
  EXPECT_EQ(herm_conjugate(H("z1 zb2")), H("z2 zb1"));
  EXPECT_EQ(herm_conjugate(H("1 + z1 zb1")), H("1 + z1 zb1"));
  EXPECT_EQ(herm_conjugate(H("(1 i) z1")), H("(-1 i) zb1"));
}

TEST(PfisterBase, Examples) {
  EXPECT_EQ(pfister_base(1, 2), H("1 + 2 z1 zb1 + z1^2 zb1^2"));
  EXPECT_EQ(pfister_base(3, 0), HermPoly::constant(3, 1));
  EXPECT_EQ(pfister_base(2, 1), H("1 + z1 zb1 + z2 zb2"));
}

TEST(PfisterBase, MatchesMultinomialExpansion) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 4; ++d) {
      EXPECT_EQ(pfister_base(n, d), oracle::pfister_multinomial(n, d)) << "n=" << n << " d=" << d;
      EXPECT_EQ(norm_power(n, d), oracle::norm_power_multinomial(n, d)) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Bihomogenize, Examples) {
  EXPECT_EQ(bihomogenize(H("1 + z1 zb1"), 1), H("z1 zb1 + z2 zb2"));
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 3; ++d) EXPECT_EQ(bihomogenize(pfister_base(n, d), d), norm_power(n + 1, d));
  }
  EXPECT_TRUE(bihomogenize(HermPoly(2), 3).is_zero());
  EXPECT_EQ(bihomogenize(HermPoly(2), 3).nvars(), 3u);
  EXPECT_THROW(bihomogenize(H("z1^2"), 1), std::invalid_argument);
}

TEST(Dehomogenize, Examples) {
  EXPECT_EQ(dehomogenize(H("z1 zb1 + z2 zb2"), 1), H("1 + z1 zb1", 1));
  EXPECT_EQ(dehomogenize(HermPoly::constant(3, 7), 0), HermPoly::constant(2, 7));
  EXPECT_THROW(dehomogenize(HermPoly::constant(2, 1), 2), std::out_of_range);
}

TEST(Dehomogenize, LeftInverseOfBihomogenize) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    InstanceGenerator gen({seed, 1 + seed % 3, 4});
    const std::size_t n = 1 + seed % 3;
    const HermPoly a = gen.herm(n, 4);
    const auto [da, db] = bidegree(a);
    const int d = std::max({da, db, 0}) + static_cast<int>(seed % 2);
    EXPECT_EQ(dehomogenize(bihomogenize(a, d), n), a) << "seed " << seed;
  }
}

TEST(LowestPart, Examples) {
  EXPECT_EQ(lowest_part(H("z1 zb1 + z1^2 zb1^2")), H("z1 zb1"));
  EXPECT_EQ(lowest_part(H("1 + z1 + zb1")), H("1", 1));
  EXPECT_THROW(lowest_part(HermPoly(1)), std::domain_error);
  const HermPoly u = H("3 z1 zb2 + z1^2 + (1+2 i) z2^3 zb1");
  EXPECT_EQ(lowest_part(norm_squared(2) * u), norm_squared(2) * lowest_part(u));
}

TEST(LowestPart, MultiplicativeOnRandomInputs) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    InstanceGenerator gen({seed, 2, 3});
    const std::size_t n = 1 + seed % 3;
    const HermPoly a = gen.nonzero([&](InstanceGenerator& g) { return g.herm(n, 3); });
    const HermPoly b = gen.nonzero([&](InstanceGenerator& g) { return g.herm(n, 3); });
    EXPECT_EQ(lowest_part(a * b), lowest_part(a) * lowest_part(b)) << "seed " << seed;
  }
}

TEST(ToDiagonal, Examples) {
  DiagPoly expected(2);
  expected.add_term(MultiIndex{0, 0}, 1);
  expected.add_term(MultiIndex{1, 2}, 3);
  EXPECT_EQ(to_diagonal(H("1 + 3 z1 zb1 z2^2 zb2^2")), expected);
  EXPECT_EQ(to_diagonal(pfister_base(1, 2)).term_count(), 3u);
  EXPECT_EQ(to_diagonal(pfister_base(1, 2)), (DiagPoly::constant(1, 1) + coordinate_sum(1)).pow(2));
  EXPECT_THROW(to_diagonal(H("z1 zb2")), std::invalid_argument);
  EXPECT_THROW(to_diagonal(H("(2 i) z1 zb1")), std::invalid_argument);
  EXPECT_EQ(from_diagonal(to_diagonal(pfister_base(3, 2))), pfister_base(3, 2));
}

TEST(Dims, Examples) {
  for (long d = 0; d <= 8; ++d) {
    EXPECT_EQ(dims(2, d).N, d + 1);
    EXPECT_EQ(dims(1, d).N, 1);
  }
  EXPECT_EQ(dims(2, 2).M, 6);
  EXPECT_EQ(dims(2, 0).N + dims(2, 1).N + dims(2, 2).N, 6);
}

TEST(Dims, DimensionIdentity) {
  for (long n = 1; n <= 8; ++n) {
    for (long d = 0; d <= 8; ++d) {
      Integer sum = 0;
      for (long k = 0; k <= d; ++k) sum += dims(n, k).N;
      EXPECT_EQ(dims(n, d).M, sum);
      EXPECT_EQ(dims(n, d).M, dims(n + 1, d).N);
      // N(n,d) counts homogeneous monomials, M(n,d) those of degree <= d.
      EXPECT_EQ(dims(n, d).N, static_cast<long>(monomials_of_degree(static_cast<std::size_t>(n), static_cast<int>(d)).size()));
    }
  }
}

TEST(Algebra, RingLawsAndConjugation) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    InstanceGenerator gen({seed, 2, 3});
    const std::size_t n = 1 + seed % 3;
    const HermPoly a = gen.herm(n, 3), b = gen.herm(n, 3), c = gen.herm(n, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(herm_conjugate(a * b), herm_conjugate(a) * herm_conjugate(b));
    EXPECT_EQ(herm_conjugate(herm_conjugate(a)), a);
    // Independent check of the product: polarized evaluation is multiplicative.
    const auto z = oracle::random_point(rng, n), w = oracle::random_point(rng, n);
    EXPECT_EQ(oracle::evaluate(a * b, z, w), oracle::evaluate(a, z, w) * oracle::evaluate(b, z, w));
    const HermPoly ab = a * b;
    for (const auto& [k, coef] : ab.terms()) EXPECT_FALSE(coef.is_zero());
  }
}

TEST(Algebra, HermitianSymmetryIsRealOnDiagonal) {
  const HermPoly a = H("2 + (1+1 i) z1 zb2 + (1-1 i) z2 zb1 + z1^2 zb1^2");
  EXPECT_TRUE(is_hermitian_symmetric(a));
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto z = oracle::random_point(rng, 2);
    std::vector<GaussianRational> zbar;
    for (const auto& c : z) zbar.push_back(c.conj());
    EXPECT_TRUE(oracle::evaluate(a, z, zbar).is_real());
  }
  EXPECT_FALSE(is_hermitian_symmetric(H("(1 i) z1 zb2")));
}

}  // namespace
}  // namespace hermsos
