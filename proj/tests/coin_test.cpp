#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qwalk/coin.hpp"
#include "support.hpp"

using namespace qwalk;
using qwalk::test_support::max_entry_difference;

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

TEST(Coin, HadamardEntries) {
  const CoinOperator h = make_hadamard();
  EXPECT_EQ(h.a, Amplitude(kInvSqrt2));
  EXPECT_EQ(h.b, Amplitude(kInvSqrt2));
  EXPECT_EQ(h.c, Amplitude(kInvSqrt2));
  EXPECT_EQ(h.d, Amplitude(-kInvSqrt2));
}

TEST(Coin, HadamardSquaredIsIdentity) {
  EXPECT_LT(max_entry_difference(make_hadamard() * make_hadamard(), CoinOperator{}), 1e-15);
}

TEST(Coin, HadamardValidWithDeterminantMinusOne) {
  const CoinOperator h = make_hadamard();
  EXPECT_TRUE(validate_coin(h).valid);
  EXPECT_NEAR(std::abs(h.determinant() - Amplitude(-1.0)), 0.0, 1e-15);
}

TEST(Coin, KonnoReproducesHadamard) {
  const CoinOperator u = make_konno_coin(kInvSqrt2, kInvSqrt2, -1.0);
  EXPECT_LT(max_entry_difference(u, make_hadamard()), 1e-15);
}

TEST(Coin, KonnoIdentity) {
  EXPECT_LT(max_entry_difference(make_konno_coin(1.0, 0.0, 1.0), CoinOperator{}), 1e-15);
}

TEST(Coin, KonnoReproducesGaltonCoin) {
  for (double delta : {0.1, 0.7, 2.0, -1.3}) {
    const CoinOperator u = make_konno_coin(std::cos(delta), Amplitude(0.0, -std::sin(delta)), 1.0);
    EXPECT_LT(max_entry_difference(u, make_galton_coin(delta)), 1e-15) << delta;
  }
}

TEST(Coin, KonnoRejectsNonUnitRow) {
  EXPECT_THROW(make_konno_coin(1.0, 0.5, 1.0), std::invalid_argument);
}

TEST(Coin, KonnoRejectsNonUnitDeterminant) {
  EXPECT_THROW(make_konno_coin(1.0, 0.0, 2.0), std::invalid_argument);
  EXPECT_THROW(make_konno_coin(1.0, 0.0, Amplitude(0.0, 0.0)), std::invalid_argument);
}

TEST(Coin, GaltonSpecialAngles) {
  EXPECT_LT(max_entry_difference(make_galton_coin(0.0), CoinOperator{}), 1e-300);
  const CoinOperator swap = make_galton_coin(std::numbers::pi / 2);
  EXPECT_LT(max_entry_difference(swap, {0.0, Amplitude(0, -1), Amplitude(0, -1), 0.0}), 1e-15);
  const CoinOperator quarter = make_galton_coin(std::numbers::pi / 4);
  const CoinOperator expected{kInvSqrt2, Amplitude(0, -kInvSqrt2), Amplitude(0, -kInvSqrt2), kInvSqrt2};
  EXPECT_LT(max_entry_difference(quarter, expected), 1e-15);
}

TEST(Coin, GaltonRejectsNonFinite) {
  EXPECT_THROW(make_galton_coin(std::numeric_limits<double>::infinity()), std::invalid_argument);
}

TEST(Coin, ValidateReportsRowNorm) {
  const CoinCheck check = validate_coin({1.0, 0.0, 0.0, 2.0});
  EXPECT_FALSE(check.valid);
  EXPECT_NEAR(check.row_norm_error, 3.0, 1e-15);
  EXPECT_NE(check.describe().find("unit row norm"), std::string::npos);
}

TEST(Coin, ValidateGaltonPiOverFive) {
  const CoinCheck check = validate_coin(make_galton_coin(std::numbers::pi / 5));
  EXPECT_TRUE(check.valid) << check.describe();
  EXPECT_TRUE(check.describe().empty());
}

TEST(Coin, ValidateRejectsNaN) {
  EXPECT_FALSE(validate_coin({std::nan(""), 0.0, 0.0, 1.0}).valid);
}

// Every constructor output passes validation.
TEST(CoinProperty, ConstructedCoinsAreUnitary) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const CoinOperator k = test_support::random_konno_coin(rng, 1.0);
    const CoinCheck ck = validate_coin(k);
    ASSERT_TRUE(ck.valid) << ck.describe();
    const CoinOperator g = make_galton_coin(angle(rng));
    ASSERT_TRUE(validate_coin(g).valid);
    // U U^dagger = I
    ASSERT_LT(max_entry_difference(k * k.adjoint(), CoinOperator{}), 1e-12);
  }
}

TEST(Coin, InitialStateNormalization) {
  EXPECT_NO_THROW(require_normalized({0.7071067811865476, Amplitude(0, 0.7071067811865476)}));
  EXPECT_THROW(require_normalized({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(require_normalized({0.0, 0.0}), std::invalid_argument);
}
