#pragma once

#include <vector>

#include "uhs/metric.hpp"

namespace uhs {

/// One-point extension profile over a finite metric space: values[i] is the
/// prescribed distance from the new point to base point i.
struct KatetovMap {
  FiniteMetricSpace base;
  std::vector<Rat> values;
};

/// True iff |f(x)-f(y)| <= d(x,y) <= f(x)+f(y) for every pair and all values
/// are strictly positive. Throws on length mismatch.
bool is_katetov(const FiniteMetricSpace& x, const std::vector<Rat>& f);

/// x with one new point at distance f(i) from point i. Throws if f is not
/// Katetov over x.
FiniteMetricSpace extend_with(const FiniteMetricSpace& x, const std::vector<Rat>& f);

/// All value vectors over `values` (taken in ascending order) satisfying
/// is_katetov, in lexicographic order. Complete: equals the product
/// enumeration filtered by is_katetov.
std::vector<std::vector<Rat>> enumerate_katetov(const FiniteMetricSpace& x,
                                                std::vector<Rat> values);

/// The discretization claim map for a base space X with pairwise distances
/// already on the grid [0,1]_m and an external point y at the given ambient
/// distances: on_base[i] = ceil_m(d(x_i,y)), at_new = max_i(on_base[i] - d(x_i,y)).
/// When at_new > 0 the vector (on_base..., at_new) is Katetov over X u {y}
/// (verified, not assumed). at_new == 0 means y's distances are grid-aligned
/// and no one-point extension is needed.
struct ClaimMap {
  std::vector<Rat> on_base;
  Rat at_new;
  bool grid_aligned() const { return at_new.is_zero(); }
};

ClaimMap claim_map(const FiniteMetricSpace& base, const std::vector<Rat>& dist_to_y, int m);

}  // namespace uhs
