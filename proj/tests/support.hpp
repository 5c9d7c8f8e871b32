#pragma once

// Test-only helpers: an independent dense-matrix walk oracle and random
// coin / state generators.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::test_support {

using Cd = std::complex<double>;

/// Dense walk on a ring of `sites` positions starting at index 0 = position
/// -(sites-1)/2. Basis ordering: 2*i is R at site i, 2*i+1 is L. The step
/// matrix is assembled explicitly as (coin block-diagonal) x (permutation)
/// and applied by matrix-vector products.
class DenseWalkOracle {
 public:
  DenseWalkOracle(std::int64_t sites, const CoinOperator& u, StepOrdering ordering)
      : sites_(sites), step_(2 * sites, 2 * sites) {
    const auto dim = 2 * sites;
    Eigen::MatrixXcd coin = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::int64_t i = 0; i < sites; ++i) {
      coin(2 * i, 2 * i) = u.a;
      coin(2 * i, 2 * i + 1) = u.b;
      coin(2 * i + 1, 2 * i) = u.c;
      coin(2 * i + 1, 2 * i + 1) = u.d;
      const std::int64_t up = (i + 1) % sites;
      const std::int64_t down = (i + sites - 1) % sites;
      shift(2 * up, 2 * i) = 1.0;
      shift(2 * down + 1, 2 * i + 1) = 1.0;
    }
    step_ = ordering == StepOrdering::CoinAfterShift ? Eigen::MatrixXcd(coin * shift)
                                                     : Eigen::MatrixXcd(shift * coin);
  }

  std::int64_t half_size() const { return (sites_ - 1) / 2; }

  Eigen::VectorXcd initial(Position origin, const InitialCoinState& init) const {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * sites_);
    const std::int64_t i = origin + half_size();
    v(2 * i) = init.alpha;
    v(2 * i + 1) = init.beta;
    return v;
  }

  Eigen::VectorXcd evolve(Eigen::VectorXcd v, std::int64_t steps) const {
    for (std::int64_t k = 0; k < steps; ++k) v = step_ * v;
    return v;
  }

  Cd right(const Eigen::VectorXcd& v, Position m) const { return v(2 * (m + half_size())); }
  Cd left(const Eigen::VectorXcd& v, Position m) const { return v(2 * (m + half_size()) + 1); }

  const Eigen::MatrixXcd& step_matrix() const { return step_; }

 private:
  std::int64_t sites_;
  Eigen::MatrixXcd step_;
};

/// |b| uniform in [0, max_b], phases of a, b and Delta uniform.
inline CoinOperator random_konno_coin(std::mt19937_64& rng, double max_b = 0.9) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  const double b_mod = max_b * unit(rng);
  const Cd a = std::polar(std::sqrt(1.0 - b_mod * b_mod), phase(rng));
  const Cd b = std::polar(b_mod, phase(rng));
  return make_konno_coin(a, b, std::polar(1.0, phase(rng)));
}

/// Uniform on the unit sphere in C^2.
inline InitialCoinState random_coin_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  double v[4];
  double norm = 0.0;
  for (double& x : v) {
    x = g(rng);
    norm += x * x;
  }
  norm = std::sqrt(norm);
  return {{v[0] / norm, v[1] / norm}, {v[2] / norm, v[3] / norm}};
}

inline double max_entry_difference(const CoinOperator& x, const CoinOperator& y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c), std::abs(x.d - y.d)});
}

/// Distance between x and y after removing the best global phase.
inline double phase_normalized_difference(const CoinOperator& x, const CoinOperator& y) {
  const Cd overlap = std::conj(x.a) * y.a + std::conj(x.b) * y.b + std::conj(x.c) * y.c +
                     std::conj(x.d) * y.d;
  const Cd phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Cd{1.0};
  return max_entry_difference(phase * x, y);
}

inline const InitialCoinState kSymmetricInit{1.0 / std::numbers::sqrt2, {0.0, 1.0 / std::numbers::sqrt2}};
inline const InitialCoinState kRightInit{1.0, 0.0};

}  // namespace qwalk::test_support
