#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qwalk {

ProbabilityDistribution classical_rw_distribution(std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("number of steps must be non-negative");
  // Ratio recurrence from the central term in extended precision, then
  // normalize; avoids the cancellation of lgamma differences at large n.
  const auto n = static_cast<std::size_t>(steps);
  std::vector<long double> weight(n + 1);
  const std::size_t mode = n / 2;
  weight[mode] = 1.0L;
  for (std::size_t k = mode; k < n; ++k)
    weight[k + 1] = weight[k] * static_cast<long double>(n - k) / static_cast<long double>(k + 1);
  for (std::size_t k = mode; k > 0; --k)
    weight[k - 1] = weight[k] * static_cast<long double>(k) / static_cast<long double>(n - k + 1);
  const long double sum = std::accumulate(weight.begin(), weight.end(), 0.0L);

  ProbabilityDistribution dist;
  dist.steps = steps;
  dist.entries.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double p = static_cast<double>(weight[k] / sum);
    dist.entries.push_back({2 * static_cast<Position>(k) - steps, p, p / 2, p / 2});
  }
  return dist;
}

MomentReport moments(const ProbabilityDistribution& dist) {
  long double first = 0.0L;
  long double second = 0.0L;
  const long double scale = static_cast<long double>(dist.resolution);
  for (const auto& e : dist.entries) {
    const long double x = static_cast<long double>(e.position) / scale;
    first += x * e.p;
    second += x * x * e.p;
  }
  MomentReport report;
  report.mean = static_cast<double>(first);
  report.second_moment = static_cast<double>(second);
  const long double variance = second - first * first;
  report.variance = variance < 0.0L && variance > -1e-10L ? 0.0 : static_cast<double>(variance);
  report.std_dev = std::sqrt(std::max(report.variance, 0.0));
  return report;
}

namespace {

MomentReport from_mean_and_second(double mean, double second) {
  MomentReport r;
  r.mean = mean;
  r.second_moment = second;
  r.variance = second - mean * mean;
  r.std_dev = std::sqrt(std::max(r.variance, 0.0));
  return r;
}

void require_konno_domain(const CoinOperator& coin, const InitialCoinState& init) {
  if (std::abs(coin.a) <= 1e-9)
    throw std::domain_error("asymptotic moments undefined for |a| = 0 (swap coin)");
  if (!validate_coin(coin).valid) throw std::invalid_argument("coin is not unitary");
  require_normalized(init);
}

}  // namespace

MomentReport konno_predicted_moments(const CoinOperator& coin, const InitialCoinState& init,
                                     std::int64_t steps) {
  require_konno_domain(coin, init);
  const double n = static_cast<double>(steps);
  const double spread = 1.0 - std::abs(coin.b);
  const double cross =
      2.0 * std::real(coin.a * std::conj(coin.b) * init.alpha * std::conj(init.beta)) /
      std::norm(coin.a);
  const double bracket = std::norm(init.beta) - std::norm(init.alpha) + cross;
  return from_mean_and_second(bracket * spread * n, spread * n * n);
}

MomentReport walk_asymptotic_moments(const CoinOperator& coin, const InitialCoinState& init,
                                     std::int64_t steps, StepOrdering ordering) {
  require_konno_domain(coin, init);
  InitialCoinState effective = init;
  if (ordering == StepOrdering::CoinAfterShift) {
    const CoinOperator inverse = coin.adjoint();
    effective = {inverse.a * init.alpha + inverse.b * init.beta,
                 inverse.c * init.alpha + inverse.d * init.beta};
  }
  const double n = static_cast<double>(steps);
  const double spread = 1.0 - std::abs(coin.b);
  const double cross = 2.0 *
                       std::real(coin.a * std::conj(coin.b) * effective.alpha *
                                 std::conj(effective.beta)) /
                       std::norm(coin.a);
  const double bracket = std::norm(effective.alpha) - std::norm(effective.beta) + cross;
  return from_mean_and_second(bracket * spread * n, spread * n * n);
}

MomentReport galton_predicted_moments(double delta, const InitialCoinState& init,
                                      std::int64_t steps) {
  if (!std::isfinite(delta)) throw std::invalid_argument("galton angle must be finite");
  if (std::sin(delta) >= 1.0 - 1e-12)
    throw std::domain_error("galton prediction degenerate at sin(delta) = 1 (zero spread)");
  if (std::abs(std::cos(delta)) <= 1e-12)
    throw std::domain_error("galton prediction undefined where tan(delta) diverges");
  require_normalized(init);
  const double n = static_cast<double>(steps);
  const double spread = 1.0 - std::sin(delta);
  const double bracket = std::norm(init.beta) - std::norm(init.alpha) +
                         2.0 * std::imag(init.alpha * std::conj(init.beta)) * std::tan(delta);
  return from_mean_and_second(bracket * spread * n, spread * n * n);
}

double total_variation(const ProbabilityDistribution& lhs, const ProbabilityDistribution& rhs) {
  const std::int64_t common = std::lcm(lhs.resolution, rhs.resolution);
  const ProbabilityDistribution a = refine(lhs, common / lhs.resolution);
  const ProbabilityDistribution b = refine(rhs, common / rhs.resolution);

  long double sum = 0.0L;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->position < ib->position)) {
      sum += std::abs(ia->p);
      ++ia;
    } else if (ia == a.entries.end() || ib->position < ia->position) {
      sum += std::abs(ib->p);
      ++ib;
    } else {
      sum += std::abs(ia->p - ib->p);
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(sum / 2.0L);
}

}  // namespace qwalk
