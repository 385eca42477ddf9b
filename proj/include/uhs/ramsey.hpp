#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uhs/metric.hpp"

namespace uhs {

/// Total point coloring with k >= 1 colors.
struct Coloring {
  int k = 1;
  std::vector<int> color;
};

Coloring random_coloring(int n, int k, std::uint64_t seed);
Coloring parity_coloring(int n, int k);
/// Greedy stress coloring: each point takes the color minimizing the largest
/// monochromatic clique it joins in the minimum-distance graph.
Coloring adversarial_coloring(const FiniteMetricSpace& x, int k);

/// Connected components of the graph with edges d <= eps (eps-chains).
std::vector<std::vector<int>> epsilon_components(const FiniteMetricSpace& x, const Rat& eps);

/// Largest capped distance spanned inside p's eps-component:
/// max over pairs (a,b) of min(d(a,b), 1); 0 for a singleton component.
Rat lambda_eps(const FiniteMetricSpace& x, int p, const Rat& eps);

/// Finite proxy for the chain-span infimum: min of lambda_eps over the grid.
/// Exact once the grid reaches below the least positive distance.
Rat lambda_over_grid(const FiniteMetricSpace& x, int p, const std::vector<Rat>& eps_grid);

/// The full (eps, lambda_eps) curve over the grid. On a finite space the
/// infimum itself is always 0 below the least positive distance; the curve's
/// plateau is where the chain-span obstruction actually shows.
std::vector<std::pair<Rat, Rat>> lambda_curve(const FiniteMetricSpace& x, int p,
                                              const std::vector<Rat>& eps_grid);

struct EmbeddingWitness {
  int color = -1;
  Isometry embedding;  // indices into x
};

/// First (by color, then lexicographic mapping) embedding of `target` into the
/// eps-fattening of a color class; nullopt when every class is exhausted.
/// Every returned witness re-verifies isometry and fattening membership.
std::optional<EmbeddingWitness> find_mono_copy(const FiniteMetricSpace& x, const Coloring& chi,
                                               const FiniteMetricSpace& target, const Rat& eps);

struct ExperimentRow {
  std::uint64_t seed = 0;  // 0 for the deterministic coloring kinds
  std::string coloring_kind;
  int k = 0;
  Rat eps;
  int target_id = 0;
  bool found = false;
  int color = -1;
  int witness_size = 0;  // 1 + max witness index: prefix of x needed
  long long millis = 0;
};

/// Batch find_mono_copy over random colorings (one per seed in [seed_lo,
/// seed_hi]), the adversarial greedy coloring, and the index-parity coloring,
/// for every target.
std::vector<ExperimentRow> run_experiment(const FiniteMetricSpace& x,
                                          const std::vector<FiniteMetricSpace>& targets,
                                          const Rat& eps, int k, std::uint64_t seed_lo,
                                          std::uint64_t seed_hi);

}  // namespace uhs
