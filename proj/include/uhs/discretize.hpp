#pragma once

#include <string>
#include <vector>

#include "uhs/metric.hpp"

namespace uhs {

/// A point k/m of the grid [0,1]_m, 0 <= k <= m.
struct GridValue {
  int k = 0;
  int m = 1;
  Rat value() const { return Rat(k, m); }
};

/// Least grid value >= a, for a in [0,1]. Throws if a is out of range.
GridValue grid_ceil(const Rat& a, int m);

/// Entrywise grid_ceil of the off-diagonal entries. The result is asserted to
/// pass validate (ceil of a metric is a metric; a violation would be a bug).
FiniteMetricSpace ceil_metric(const FiniteMetricSpace& x, int m);

/// The collapse map from the fine grid [0,1]_{2(m^2+m)} onto [0,1]_m:
/// f(x) = l/m for the least l with x <= l*(1/m + 1/(m^2+m)).
/// Throws if x is not exactly on the fine grid.
GridValue collapse_value(const Rat& x, int m);

/// Entrywise collapse of a fine-grid-valued space; asserted to pass validate.
FiniteMetricSpace collapse_metric(const FiniteMetricSpace& x, int m);

/// Outcome for one ambient point processed by dense_discrete_copy.
struct CoverEntry {
  int ambient_index;
  Rat distance;  // final distance to the constructed copy
  bool covered;  // distance <= 1/m
};

struct DenseCopyResult {
  std::vector<int> copy;     // ambient indices of the copy points, in construction order
  std::vector<int> claimed;  // for each copy point, the grid-space index it realizes
  std::vector<CoverEntry> cover;
  bool diverged = false;
  std::string trace;  // nonempty iff diverged: what was searched and not found
};

/// Finite-scale back-and-forth: builds inside `ambient` a copy of the prefix
/// pattern of X_m = ceil_metric(ambient, m) whose 1/m-fattening covers the
/// processed ambient points. Odd steps claim the least grid index not yet
/// realized; even steps cover the next ambient point, via the claim map when
/// it is not yet within 1/m of the copy. Runs `steps` odd/even rounds or
/// until the ambient is exhausted; a missing realizer stops the construction
/// with a trace.
DenseCopyResult dense_discrete_copy(const FiniteMetricSpace& ambient, int m, int steps);

}  // namespace uhs
