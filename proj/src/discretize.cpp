#include "uhs/discretize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "uhs/katetov.hpp"

namespace uhs {

GridValue grid_ceil(const Rat& a, int m) {
  if (m < 1) throw std::invalid_argument("grid_ceil: m must be >= 1");
  if (a < Rat(0) || a > Rat(1)) throw std::invalid_argument("grid_ceil: value outside [0,1]");
  // ceil(m * num / den) with nonnegative num
  long long num = a.num() * static_cast<long long>(m);
  long long den = a.den();
  long long k = (num + den - 1) / den;
  return {static_cast<int>(k), m};
}

FiniteMetricSpace ceil_metric(const FiniteMetricSpace& x, int m) {
  FiniteMetricSpace out(x.size());
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) out.set_d(i, j, grid_ceil(x.d(i, j), m).value());
  if (!out.is_valid()) throw std::logic_error("ceil_metric: rounded matrix failed validate");
  return out;
}

GridValue collapse_value(const Rat& x, int m) {
  if (m < 1) throw std::invalid_argument("collapse_value: m must be >= 1");
  long long fine = 2LL * (static_cast<long long>(m) * m + m);
  if (x < Rat(0) || x > Rat(1) || fine % x.den() != 0)
    throw std::invalid_argument("collapse_value: input not on the grid [0,1]_" +
                                std::to_string(fine));
  long long k = x.num() * (fine / x.den());
  // x <= l*(1/m + 1/(m^2+m)) == k <= 2*l*(m+2), so l = ceil(k / (2m+4)).
  long long l = (k + 2 * m + 3) / (2 * m + 4);
  return {static_cast<int>(l), m};
}

FiniteMetricSpace collapse_metric(const FiniteMetricSpace& x, int m) {
  FiniteMetricSpace out(x.size());
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) out.set_d(i, j, collapse_value(x.d(i, j), m).value());
  if (!out.is_valid()) throw std::logic_error("collapse_metric: collapsed matrix failed validate");
  return out;
}

namespace {

Rat distance_to_set(const FiniteMetricSpace& space, int p, const std::vector<int>& set) {
  Rat best(2);
  for (int q : set) best = min(best, p == q ? Rat(0) : space.d(p, q));
  return best;
}

}  // namespace

DenseCopyResult dense_discrete_copy(const FiniteMetricSpace& ambient, int m, int steps) {
  if (ambient.size() == 0) throw std::invalid_argument("dense_discrete_copy: empty ambient");
  FiniteMetricSpace grid = ceil_metric(ambient, m);
  const Rat one_over_m(1, m);
  int n = ambient.size();

  DenseCopyResult res;
  std::vector<char> index_claimed(n, 0);

  // tilde[p] = ambient point playing copy position p; sigma[p] = grid index it
  // realizes. Invariant: d_ambient(tilde[a],tilde[b]) == d_grid(sigma[a],sigma[b]).
  auto realize_grid_profile = [&](int target_idx) -> bool {
    for (int z = 0; z < n; ++z) {
      bool used = false;
      for (int t : res.copy)
        if (t == z) used = true;
      if (used) continue;
      bool ok = true;
      for (std::size_t p = 0; p < res.copy.size() && ok; ++p)
        if (!(ambient.d(z, res.copy[p]) == grid.d(res.claimed[p], target_idx))) ok = false;
      if (ok) {
        res.copy.push_back(z);
        res.claimed.push_back(target_idx);
        index_claimed[target_idx] = 1;
        return true;
      }
    }
    return false;
  };

  auto claim_next_index = [&](const char* stage) -> bool {
    int j = 0;
    while (j < n && index_claimed[j]) ++j;
    if (j == n) return true;  // every grid index realized; nothing to extend
    if (realize_grid_profile(j)) return true;
    std::ostringstream os;
    os << stage << ": no ambient realizer for the grid profile of index " << j << " against "
       << res.copy.size() << " copy points";
    res.diverged = true;
    res.trace = os.str();
    return false;
  };

  // Seed: the first ambient point claims grid index 0.
  res.copy.push_back(0);
  res.claimed.push_back(0);
  index_claimed[0] = 1;

  int next_y = 0;
  for (int round = 0; round < steps && !res.diverged; ++round) {
    if (!claim_next_index("odd step")) break;
    if (next_y >= n) {
      bool all = true;
      for (int j = 0; j < n && all; ++j) all = index_claimed[j] != 0;
      if (all) break;
      if (!claim_next_index("even step (ambient exhausted)")) break;
      continue;
    }
    int y = next_y++;
    if (distance_to_set(ambient, y, res.copy) <= one_over_m) {
      if (!claim_next_index("even step (covered)")) break;
      continue;
    }
    std::vector<Rat> dist_y;
    FiniteMetricSpace base = ambient.restricted(res.copy);
    for (int t : res.copy) dist_y.push_back(ambient.d(t, y));
    ClaimMap cm = claim_map(base, dist_y, m);
    int z = y;  // grid-aligned: y itself realizes its rounded profile
    if (!cm.grid_aligned()) {
      z = -1;
      for (int c = 0; c < n && z < 0; ++c) {
        if (c == y) continue;
        bool used = false;
        for (int t : res.copy)
          if (t == c) used = true;
        if (used) continue;
        bool ok = ambient.d(c, y) == cm.at_new;
        for (std::size_t p = 0; p < res.copy.size() && ok; ++p)
          if (!(ambient.d(c, res.copy[p]) == cm.on_base[p])) ok = false;
        if (ok) z = c;
      }
      if (z < 0) {
        std::ostringstream os;
        os << "even step: no ambient realizer of the claim map for ambient point " << y;
        res.diverged = true;
        res.trace = os.str();
        break;
      }
    }
    // Find the least grid index matching the rounded profile (the min rule).
    int k = -1;
    for (int c = 0; c < n && k < 0; ++c) {
      if (index_claimed[c]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < res.copy.size() && ok; ++p)
        if (!(grid.d(res.claimed[p], c) == cm.on_base[p])) ok = false;
      if (ok) k = c;
    }
    if (k < 0) {
      std::ostringstream os;
      os << "even step: rounded profile of ambient point " << y
         << " is not realized at any unclaimed grid index";
      res.diverged = true;
      res.trace = os.str();
      break;
    }
    res.copy.push_back(z);
    res.claimed.push_back(k);
    index_claimed[k] = 1;
  }

  for (int y = 0; y < next_y; ++y) {
    Rat dist = distance_to_set(ambient, y, res.copy);
    res.cover.push_back({y, dist, dist <= one_over_m});
  }
  return res;
}

}  // namespace uhs
