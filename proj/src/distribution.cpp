#include "qwalk/distribution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qwalk {

double ProbabilityDistribution::total() const {
  long double sum = 0.0L;
  for (const auto& e : entries) sum += e.p;
  return static_cast<double>(sum);
}

double ProbabilityDistribution::at(Position index) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), index,
                             [](const DistributionEntry& e, Position m) { return e.position < m; });
  return (it != entries.end() && it->position == index) ? it->p : 0.0;
}

ProbabilityDistribution refine(const ProbabilityDistribution& dist, std::int64_t factor) {
  if (factor < 1) throw std::invalid_argument("refinement factor must be >= 1");
  ProbabilityDistribution out = dist;
  out.resolution = dist.resolution * factor;
  for (auto& e : out.entries) e.position *= factor;
  return out;
}

ProbabilityDistribution to_walk_positions(const ProbabilityDistribution& dist,
                                          double off_lattice_tolerance) {
  ProbabilityDistribution out;
  out.steps = dist.steps;
  out.resolution = 1;
  double stray = 0.0;
  for (const auto& e : dist.entries) {
    if (e.position % dist.resolution != 0) {
      stray += e.p;
      continue;
    }
    DistributionEntry c = e;
    c.position = e.position / dist.resolution;
    out.entries.push_back(c);
  }
  if (stray > off_lattice_tolerance) {
    std::ostringstream msg;
    msg << "distribution has mass " << stray << " between walk positions";
    throw std::invalid_argument(msg.str());
  }
  return out;
}

}  // namespace qwalk
