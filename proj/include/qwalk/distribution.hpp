#pragma once

#include <cstdint>
#include <vector>

namespace qwalk {

using Position = std::int64_t;

struct DistributionEntry {
  Position position = 0;
  double p = 0.0;        // P_m
  double p_right = 0.0;  // first coin / cebit component
  double p_left = 0.0;   // second coin / cebit component
};

/// Probability over positions, entries sorted by ascending position.
///
/// `resolution` is the number of index units per walk step: walk-core
/// output always has resolution 1, while cavity spectra on a sub-step
/// frequency grid carry the grid factor so positions can be compared.
struct ProbabilityDistribution {
  std::int64_t steps = 0;
  std::int64_t resolution = 1;
  std::vector<DistributionEntry> entries;

  double total() const;
  /// P at an index (in resolution units); 0 when absent.
  double at(Position index) const;
};

/// Same distribution expressed on a grid `factor` times finer.
ProbabilityDistribution refine(const ProbabilityDistribution& dist, std::int64_t factor);

/// Collapses a fine-grid distribution onto whole walk steps. Throws
/// std::invalid_argument if more than `off_lattice_tolerance` of the mass
/// sits between lattice points.
ProbabilityDistribution to_walk_positions(const ProbabilityDistribution& dist,
                                          double off_lattice_tolerance = 1e-12);

}  // namespace qwalk
