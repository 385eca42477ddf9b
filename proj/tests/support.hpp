#pragma once

// Shared test helpers: space builders, random generators, brute-force oracles.
// Oracles here stay independent of the library code paths they check.

#include <vector>

#include "uhs/metric.hpp"
#include "uhs/util.hpp"

namespace uhs::test {

/// Space from the upper triangle, row by row: {d01, d02, ..., d12, ...}.
inline FiniteMetricSpace space_from_upper(int n, const std::vector<Rat>& upper) {
  FiniteMetricSpace x(n);
  std::size_t t = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) x.set_d(i, j, upper.at(t++));
  return x;
}

/// Random valid space with distances on the grid {1/grid, ..., grid/grid}:
/// random symmetric weights, then the shortest-path closure (which is always
/// a metric and stays on the grid).
inline FiniteMetricSpace random_grid_space(int n, int grid, SplitMix64& rng) {
  FiniteMetricSpace x(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      x.set_d(i, j, Rat(1 + static_cast<int>(rng.below(grid)), grid));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || i == k || j == k) continue;
        Rat via = x.d(i, k) + x.d(k, j);
        if (via < x.d(i, j)) x.set_d(i, j, via);
      }
  return x;
}

/// Brute-force triple scan, written independently of validate().
inline bool brute_force_is_metric(const FiniteMetricSpace& x) {
  int n = x.size();
  for (int i = 0; i < n; ++i) {
    if (!x.d(i, i).is_zero()) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && !(x.d(i, j) > Rat(0))) return false;
      if (x.d(i, j) != x.d(j, i)) return false;
      if (x.d(i, j) > Rat(1)) return false;
      for (int k = 0; k < n; ++k)
        if (x.d(i, k) > x.d(i, j) + x.d(j, k)) return false;
    }
  }
  return true;
}

/// Exhaustive injection enumeration (no pruning) counting isometric maps.
inline int brute_force_embedding_count(const FiniteMetricSpace& a, const FiniteMetricSpace& b) {
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  int count = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == a.size()) {
      ++count;
      return;
    }
    for (int j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (int p = 0; p < i; ++p)
        if (b.d(map[p], j) != a.d(p, i)) ok = false;
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      self(self, i + 1);
      used[j] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace uhs::test
