#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qwalk/analysis.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::test_support::kRightInit;
using qwalk::test_support::kSymmetricInit;

namespace {

// Exact binomial by Pascal's triangle, independent of the library's recurrence.
std::vector<double> pascal_row(int n) {
  std::vector<double> row{1.0};
  for (int k = 0; k < n; ++k) {
    std::vector<double> next(row.size() + 1, 0.0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i] / 2;
      next[i + 1] += row[i] / 2;
    }
    row = std::move(next);
  }
  return row;
}

ProbabilityDistribution delta_at(Position m) { return {0, 1, {{m, 1.0, 1.0, 0.0}}}; }

}  // namespace

TEST(Classical, SmallCases) {
  const ProbabilityDistribution two = classical_rw_distribution(2);
  ASSERT_EQ(two.entries.size(), 3u);
  EXPECT_NEAR(two.at(-2), 0.25, 1e-16);
  EXPECT_NEAR(two.at(0), 0.5, 1e-16);
  EXPECT_NEAR(two.at(2), 0.25, 1e-16);
  EXPECT_EQ(two.at(1), 0.0);
  EXPECT_NEAR(two.entries[1].p_right, 0.25, 1e-16);

  const ProbabilityDistribution zero = classical_rw_distribution(0);
  ASSERT_EQ(zero.entries.size(), 1u);
  EXPECT_EQ(zero.entries[0].p, 1.0);
  EXPECT_THROW(classical_rw_distribution(-1), std::invalid_argument);
}

TEST(Classical, MatchesPascalTriangle) {
  for (int n : {1, 7, 40, 151}) {
    const auto row = pascal_row(n);
    const ProbabilityDistribution d = classical_rw_distribution(n);
    for (int k = 0; k <= n; ++k) ASSERT_NEAR(d.at(2 * k - n), row[static_cast<std::size_t>(k)], 1e-15);
  }
}

TEST(Classical, StdDevIsRootN) {
  EXPECT_NEAR(moments(classical_rw_distribution(10000)).std_dev, 100.0, 1e-9);
  EXPECT_NEAR(moments(classical_rw_distribution(200)).std_dev, std::sqrt(200.0), 1e-9);
}

TEST(ClassicalProperty, VarianceIsExactlyN) {
  for (std::int64_t n : {1, 2, 3, 10, 99, 500, 1001, 4096, 10000}) {
    const MomentReport r = moments(classical_rw_distribution(n));
    ASSERT_NEAR(r.variance, static_cast<double>(n), 1e-9) << n;
    ASSERT_NEAR(r.mean, 0.0, 1e-9);
  }
}

TEST(Moments, Basics) {
  const MomentReport d = moments(delta_at(0));
  EXPECT_EQ(d.mean, 0.0);
  EXPECT_EQ(d.variance, 0.0);
  const MomentReport c = moments(classical_rw_distribution(2));
  EXPECT_NEAR(c.mean, 0.0, 1e-16);
  EXPECT_NEAR(c.second_moment, 2.0, 1e-15);
}

TEST(Moments, UsesResolution) {
  ProbabilityDistribution d{0, 5, {{-5, 0.5, 0.5, 0.0}, {10, 0.5, 0.0, 0.5}}};
  const MomentReport r = moments(d);
  EXPECT_NEAR(r.mean, 0.5, 1e-15);
  EXPECT_NEAR(r.second_moment, 2.5, 1e-15);
  EXPECT_NEAR(r.variance, 2.25, 1e-15);
}

TEST(Konno, HadamardRightInit) {
  const MomentReport r = konno_predicted_moments(make_hadamard(), kRightInit, 100);
  const double spread = 1.0 - 1.0 / std::numbers::sqrt2;
  EXPECT_NEAR(std::abs(r.mean), spread * 100, 1e-12);
  EXPECT_NEAR(r.second_moment, spread * 100 * 100, 1e-9);
}

TEST(Konno, SymmetricInitHasZeroMean) {
  EXPECT_NEAR(konno_predicted_moments(make_hadamard(), kSymmetricInit, 300).mean, 0.0, 1e-12);
}

TEST(Konno, IdentityCoinIsBallistic) {
  EXPECT_NEAR(konno_predicted_moments(CoinOperator{}, kRightInit, 50).second_moment, 2500.0, 1e-12);
}

TEST(Konno, RejectsSwapCoin) {
  EXPECT_THROW(konno_predicted_moments({0.0, 1.0, 1.0, 0.0}, kRightInit, 10), std::domain_error);
}

// The literal bracket, evaluated by hand for one complex coin.
TEST(Konno, LiteralBracket) {
  const Amplitude a = std::polar(0.8, 0.3);
  const Amplitude b = std::polar(0.6, -1.1);
  const CoinOperator u = make_konno_coin(a, b, std::polar(1.0, 0.5));
  const InitialCoinState init{std::polar(0.6, 0.2), std::polar(0.8, 1.0)};
  // Re(a b* alpha beta*) = 0.8*0.6*0.6*0.8 cos(0.3 + 1.1 + 0.2 - 1.0)
  const double cross = 2 * 0.2304 * std::cos(0.6) / 0.64;
  const double bracket = 0.64 - 0.36 + cross;
  EXPECT_NEAR(konno_predicted_moments(u, init, 10).mean, bracket * 0.4 * 10, 1e-12);
}

TEST(WalkAsymptotics, MatchesSimulationForRandomCoins) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 6; ++trial) {
    const CoinOperator u = test_support::random_konno_coin(rng);
    const InitialCoinState init = test_support::random_coin_state(rng);
    for (auto ordering : {StepOrdering::CoinAfterShift, StepOrdering::ShiftAfterCoin}) {
      const std::int64_t n = 400;
      const MomentReport sim =
          moments(probabilities(evolve(initial_state(WalkTopology::line(), 0, init), u, ordering, n)));
      const MomentReport pred = walk_asymptotic_moments(u, init, n, ordering);
      const double scale = (1.0 - std::abs(u.b)) * n;
      ASSERT_NEAR(sim.mean, pred.mean, 0.05 * scale) << trial;
      ASSERT_NEAR(sim.second_moment, pred.second_moment, 0.05 * pred.second_moment);
    }
  }
}

TEST(Galton, RealEqualInitHasZeroMean) {
  const InitialCoinState equal{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  for (double delta : {0.1, 0.5, 1.0, 1.4, -0.7}) EXPECT_NEAR(galton_predicted_moments(delta, equal, 100).mean, 0.0, 1e-12);
}

TEST(Galton, PiOverFiveSpread) {
  const InitialCoinState equal{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  const MomentReport r = galton_predicted_moments(std::numbers::pi / 5, equal, 100);
  EXPECT_NEAR(r.std_dev, 64.204, 0.001);
  EXPECT_NEAR(r.std_dev, std::sqrt(1 - std::sin(std::numbers::pi / 5)) * 100, 1e-10);
}

TEST(Galton, ZeroAngleBallistic) {
  EXPECT_NEAR(galton_predicted_moments(0.0, kRightInit, 30).second_moment, 900.0, 1e-12);
}

TEST(Galton, Degenerate) {
  EXPECT_THROW(galton_predicted_moments(std::numbers::pi / 2, kRightInit, 10), std::domain_error);
  EXPECT_THROW(galton_predicted_moments(-std::numbers::pi / 2, kRightInit, 10), std::domain_error);
}

TEST(Galton, LiteralTanTerm) {
  // alpha = 1/sqrt2, beta = i/sqrt2: Im(alpha beta*) = -1/2.
  const double d = 0.4;
  const double expected = (0.0 + 2 * (-0.5) * std::tan(d)) * (1 - std::sin(d)) * 10;
  EXPECT_NEAR(galton_predicted_moments(d, kSymmetricInit, 10).mean, expected, 1e-12);
}

TEST(TotalVariation, Basics) {
  const auto c = classical_rw_distribution(20);
  EXPECT_EQ(total_variation(c, c), 0.0);
  EXPECT_NEAR(total_variation(delta_at(0), delta_at(1)), 1.0, 1e-16);
}

TEST(TotalVariation, DifferentResolutions) {
  ProbabilityDistribution fine{0, 3, {{3, 1.0, 1.0, 0.0}}};
  EXPECT_EQ(total_variation(fine, delta_at(1)), 0.0);
  EXPECT_NEAR(total_variation(fine, delta_at(0)), 1.0, 1e-16);
}

TEST(TotalVariation, QuantumVsClassicalAt200) {
  const auto qw = probabilities(
      evolve(initial_state(WalkTopology::line(), 0, kSymmetricInit), make_hadamard(), StepOrdering::CoinAfterShift, 200));
  const double tv = total_variation(qw, classical_rw_distribution(200));
  EXPECT_GT(tv, 0.3);
  // Reference value from an independent numpy evaluation of the same walk.
  EXPECT_NEAR(tv, 0.8739880090206033, 1e-9);
}

TEST(TotalVariationProperty, MetricBounds) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto u = test_support::random_konno_coin(rng);
    const auto a = probabilities(evolve(initial_state(WalkTopology::line(), 0, test_support::random_coin_state(rng)), u,
                                        StepOrdering::CoinAfterShift, 30));
    const auto b = classical_rw_distribution(30 + i % 2);
    const double tv = total_variation(a, b);
    ASSERT_GE(tv, 0.0);
    ASSERT_LE(tv, 1.0 + 1e-12);
    ASSERT_EQ(tv, total_variation(b, a));
  }
}
