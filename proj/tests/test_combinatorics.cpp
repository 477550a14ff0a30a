#include <gtest/gtest.h>

#include <cmath>

#include "mpsep/combinatorics.hpp"
#include "mpsep/errors.hpp"
#include "test_support.hpp"

namespace mpsep {
namespace {

using testing::points;

// Function-counting recursion C(m, d) = C(m-1, d) + C(m-1, d-1) for m
// points in general position with d free parameters (bias included).
BigInt cover_recursion(std::uint64_t m, std::uint64_t d) {
  std::vector<std::vector<BigInt>> c(m + 1, std::vector<BigInt>(d + 1, 0));
  for (std::uint64_t k = 1; k <= d; ++k) c[1][k] = 2;
  for (std::uint64_t p = 2; p <= m; ++p) {
    for (std::uint64_t k = 1; k <= d; ++k) c[p][k] = c[p - 1][k] + c[p - 1][k - 1];
  }
  return c[m][d];
}

BigInt binomial_pascal(std::uint64_t m, std::uint64_t k) {
  std::vector<BigInt> row(m + 1, 0);
  row[0] = 1;
  for (std::uint64_t r = 1; r <= m; ++r) {
    for (std::uint64_t j = r; j >= 1; --j) row[j] += row[j - 1];
  }
  return k <= m ? row[k] : BigInt(0);
}

TEST(Bounds, SmallValues) {
  EXPECT_EQ(cover_bound(4, 2), 14);
  EXPECT_EQ(cover_bound(8, 3), 128);
  EXPECT_EQ(cover_bound(1, 5), 2);
  EXPECT_EQ(sauer_shelah_bound(8, 3), 326);
  EXPECT_EQ(sauer_shelah_bound(4, 2), 30);
  EXPECT_THROW(cover_bound(0, 3), std::invalid_argument);
}

TEST(Bounds, MatchFunctionCountingRecursion) {
  for (std::uint64_t m = 1; m <= 40; ++m) {
    for (std::uint64_t n = 0; n <= 12; ++n) {
      EXPECT_EQ(cover_bound(m, n), cover_recursion(m, n + 1)) << m << "," << n;
    }
  }
}

TEST(Bounds, SauerShelahByPascal) {
  for (std::uint64_t m = 1; m <= 30; ++m) {
    for (std::uint64_t n = 0; n <= 8; ++n) {
      BigInt expected = 0;
      for (std::uint64_t i = 0; i <= n + 1; ++i) expected += binomial_pascal(m, i);
      EXPECT_EQ(sauer_shelah_bound(m, n), 2 * expected);
      EXPECT_LE(cover_bound(m, n), sauer_shelah_bound(m, n));
    }
  }
}

TEST(Bounds, AllDichotomiesWhenPointsAreFew) {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 1; m <= n + 1; ++m) {
      BigInt all = 1;
      all <<= m;
      EXPECT_EQ(cover_bound(m, n), all);
    }
  }
}

TEST(Bounds, ProbabilityIdentityAndClamp) {
  for (std::uint64_t m = 1; m <= 30; ++m) {
    for (std::uint64_t n = 0; n <= 10; ++n) {
      Rational all = 1;
      mpz_mul_2exp(all.get_den_mpz_t(), all.get_den_mpz_t(), m);
      Rational expected = Rational(cover_bound(m, n)) * all;
      if (expected > 1) expected = 1;
      EXPECT_EQ(probability_bound(m, n), expected);
    }
  }
  EXPECT_EQ(probability_bound(4, 2), Rational(7, 8));
  EXPECT_EQ(probability_bound(50, 10), Rational("5412639523/281474976710656"));
  EXPECT_NEAR(probability_bound(96, 24).get_d(), 7.32e-07, 0.01e-07);
}

TEST(Bounds, DistinctProbability) {
  EXPECT_EQ(distinct_probability(5, 4), Rational(4095, 8192));
  EXPECT_EQ(distinct_probability(1, 3), 1);
  EXPECT_EQ(distinct_probability(9, 3), 0);
  EXPECT_EQ(distinct_probability(8, 3), Rational("315/131072"));
  // Monte-Carlo agreement at 4 sigma.
  Rng rng(4);
  const int trials = 20000;
  int distinct = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<BitVec> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(rng.bits(4));
    std::sort(pts.begin(), pts.end());
    distinct += std::adjacent_find(pts.begin(), pts.end()) == pts.end();
  }
  const double p = distinct_probability(5, 4).get_d();
  EXPECT_NEAR(static_cast<double>(distinct) / trials, p, 4 * std::sqrt(p * (1 - p) / trials));
}

TEST(CountSeparable, Cubes) {
  EXPECT_EQ(count_separable(full_cube(1)), 4);
  EXPECT_EQ(count_separable(full_cube(2)), 14);
  EXPECT_EQ(count_separable(full_cube(3)), 104);
}

TEST(CountSeparable, EvenAndBounded) {
  Rng rng(77);
  for (int round = 0; round < 25; ++round) {
    const std::size_t n = 2 + round % 4;
    const std::size_t m = 1 + rng.below(std::min<std::uint64_t>(9, std::uint64_t{1} << n));
    const auto pts = testing::distinct_points(rng, n, m);
    const BigInt count = count_separable(pts);
    EXPECT_EQ(count % 2, 0) << "complements pair up";
    EXPECT_LE(count, cover_bound(m, n));
    EXPECT_LE(cover_bound(m, n), sauer_shelah_bound(m, n));
  }
}

TEST(CountSeparable, DeduplicatesAndGuards) {
  EXPECT_EQ(count_separable(points({"01", "01", "10"})), 4);
  const auto cube5 = full_cube(5);
  EXPECT_THROW(count_separable(cube5), GuardError);
  EXPECT_THROW(count_separable(std::span(cube5).first(21)), GuardError);
  EXPECT_EQ(count_separable(std::span(cube5).first(4), 4), 14);
}

TEST(FullCube, LexicographicOrder) {
  const auto c = full_cube(3);
  ASSERT_EQ(c.size(), 8U);
  EXPECT_EQ(c.front(), testing::bits("000"));
  EXPECT_EQ(c[5], testing::bits("101"));
  EXPECT_THROW(full_cube(21), GuardError);
}

TEST(Wilson, KnownIntervals) {
  const auto ci = wilson_interval(50, 100);
  EXPECT_NEAR(ci.low, 0.403832, 1e-6);
  EXPECT_NEAR(ci.high, 0.596168, 1e-6);
  const auto zero = wilson_interval(0, 200);
  EXPECT_NEAR(zero.low, 0.0, 1e-12);
  EXPECT_NEAR(zero.high, 0.018845, 1e-6);
  const auto all = wilson_interval(200, 200);
  EXPECT_EQ(all.high, 1.0);
  EXPECT_THROW(wilson_interval(0, 0), std::invalid_argument);
}

TEST(Estimate, SinglePointAlwaysSeparable) {
  const auto r = estimate_separability_probability(5, 1, 100, 3);
  EXPECT_EQ(r.hits, 100U);
  EXPECT_EQ(r.estimate, 1);
}

TEST(Estimate, MidTransitionAtTwiceDimension) {
  const auto r = estimate_separability_probability(20, 40, 200, 11);
  EXPECT_GE(r.estimate.get_d(), 0.2);
  EXPECT_LE(r.estimate.get_d(), 0.8);
  EXPECT_LE(r.interval.low, r.estimate.get_d());
  EXPECT_GE(r.interval.high, r.estimate.get_d());
}

TEST(Estimate, ReproducibleAndIndependentOfWorkers) {
  const auto a = estimate_separability_probability(8, 20, 150, 5);
  const auto b = estimate_separability_probability(8, 20, 150, 5);
  EXPECT_EQ(a, b);
  const auto c = estimate_separability_probability(8, 20, 150, 5, EstimateOptions{false, false, 4});
  EXPECT_EQ(a, c);
  const auto d = estimate_separability_probability(8, 20, 150, 6);
  EXPECT_EQ(d.seed, 6U);
}

TEST(Estimate, DistinctOnlyAndFullCube) {
  EXPECT_THROW(estimate_separability_probability(2, 5, 10, 1, EstimateOptions{true, false, 1}),
               std::invalid_argument);
  const auto r = estimate_separability_probability(3, 8, 400, 2, EstimateOptions{false, true, 1});
  EXPECT_LE(r.interval.low, 104.0 / 256);
  EXPECT_GE(r.interval.high, 104.0 / 256);
  EXPECT_THROW(estimate_separability_probability(3, 7, 10, 1, EstimateOptions{false, true, 1}),
               std::invalid_argument);
}

TEST(Sweep, RowsAndCsv) {
  const std::vector<Rational> ratios{Rational(1), Rational(3, 2), Rational(4)};
  const auto rows = phase_transition_sweep(6, ratios, 40, 9);
  ASSERT_EQ(rows.size(), 3U);
  EXPECT_EQ(rows[0].m, 6U);
  EXPECT_EQ(rows[1].m, 9U);
  EXPECT_EQ(rows[2].m, 24U);
  EXPECT_EQ(rows[1], estimate_separability_probability(6, 9, 40, 9));
  const std::string csv = reports_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,m,trials,hits,estimate,ci_low,ci_high,seed");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  const std::vector<Rational> bad{Rational(0)};
  EXPECT_THROW(phase_transition_sweep(6, bad, 10, 1), std::invalid_argument);
}

}  // namespace
}  // namespace mpsep
