#include "uhs/builder.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "uhs/discretize.hpp"
#include "uhs/katetov.hpp"
#include "uhs/util.hpp"

namespace uhs {

namespace {

// Subsets of {0..n-1} with 1..budget elements, by size then lexicographic.
std::vector<std::vector<int>> enumerate_subsets(int n, int budget) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next, int want) -> void {
    if (static_cast<int>(cur.size()) == want) {
      out.push_back(cur);
      return;
    }
    for (int i = next; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1, want);
      cur.pop_back();
    }
  };
  for (int size = 1; size <= std::min(budget, n); ++size) rec(rec, 0, size);
  return out;
}

bool profile_realized(const FiniteMetricSpace& space, const std::vector<int>& subspace,
                      const std::vector<Rat>& values) {
  for (int y = 0; y < space.size(); ++y) {
    bool in_sub = false;
    for (int s : subspace)
      if (s == y) in_sub = true;
    if (in_sub) continue;
    bool ok = true;
    for (std::size_t i = 0; i < subspace.size() && ok; ++i)
      if (!(space.d(y, subspace[i]) == values[i])) ok = false;
    if (ok) return true;
  }
  return false;
}

// Distances from a new point to everything outside the profile base, chosen
// greedily in point order. The deterministic default takes the least alphabet
// value consistent with all already-fixed distances; in seeded stress mode the
// choice is uniform over the consistent values (the least-value rule keeps the
// far-distance graph empty and provably never reaches pair closure).
// Returns the full row or empty if stuck.
std::vector<Rat> greedy_completion(const FiniteMetricSpace& space, const std::vector<int>& subspace,
                                   const std::vector<Rat>& values, const DistanceSet& alphabet,
                                   SplitMix64* rng) {
  int n = space.size();
  std::vector<Rat> row(n, Rat(0));
  std::vector<char> fixed(n, 0);
  for (std::size_t i = 0; i < subspace.size(); ++i) {
    row[subspace[i]] = values[i];
    fixed[subspace[i]] = 1;
  }
  for (int q = 0; q < n; ++q) {
    if (fixed[q]) continue;
    std::vector<int> consistent;
    for (int vi = 0; vi < alphabet.size(); ++vi) {
      const Rat& v = alphabet[vi];
      bool ok = true;
      for (int r = 0; r < n && ok; ++r) {
        if (!fixed[r]) continue;
        if ((row[r] - space.d(r, q)).abs() > v) ok = false;
        if (ok && v > row[r] + space.d(r, q)) ok = false;
      }
      if (ok) consistent.push_back(vi);
    }
    if (consistent.empty()) return {};
    int pick = rng ? consistent[rng->below(consistent.size())] : consistent.front();
    row[q] = alphabet[pick];
    fixed[q] = 1;
  }
  return row;
}

FiniteMetricSpace adjoin(const FiniteMetricSpace& space, const std::vector<Rat>& row) {
  int n = space.size();
  FiniteMetricSpace out(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.set_d(i, j, space.d(i, j));
    out.set_d(i, n, row[i]);
  }
  return out;
}

// m when the alphabet is exactly {1/m, 2/m, ..., 1}, else 0.
int initial_grid_order(const DistanceSet& s) {
  int m = s.size();
  for (int k = 1; k <= m; ++k)
    if (!(s[k - 1] == Rat(k, m))) return 0;
  return m;
}

// Scheme-guided realizers for initial-grid alphabets: points are labelled by
// m-subsets of a growing ground set and d(a,b) = (m - |a intersect b|)/m, the
// Johnson-scheme metric. Every Katetov profile over at most two points is
// realizable by a fresh subset, and the rounds saturate all subsets of a
// bounded ground set, which is what makes the extension property reachable at
// all: value-by-value completions starve the small-distance graph and the
// unrealized-profile count grows with the space instead of draining.
struct SchemeLabels {
  int m;
  std::vector<std::vector<int>> labels;
  int ground;

  explicit SchemeLabels(int order) : m(order), ground(order) {
    std::vector<int> seed(order);
    for (int i = 0; i < order; ++i) seed[i] = i;
    labels.push_back(std::move(seed));
  }

  Rat dist(const std::vector<int>& a, const std::vector<int>& b) const {
    int inter = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) ++inter, ++i, ++j;
      else if (a[i] < b[j]) ++i;
      else ++j;
    }
    return Rat(m - inter, m);
  }

  // Lexicographically least fresh m-subset at the prescribed distances from
  // the base labels; empty if none exists (possible for profiles over three
  // or more points, which then wait like any deferred profile).
  std::vector<int> realize(const std::vector<int>& base, const std::vector<Rat>& values) {
    int limit = ground + m;
    std::vector<int> cur;
    std::vector<int> found;
    auto rec = [&](auto&& self, int next) -> bool {
      if (static_cast<int>(cur.size()) == m) {
        for (const std::vector<int>& taken : labels)
          if (taken == cur) return false;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (!(dist(cur, labels[base[i]]) == values[i])) return false;
        found = cur;
        return true;
      }
      for (int e = next; e < limit; ++e) {
        cur.push_back(e);
        if (self(self, e + 1)) return true;
        cur.pop_back();
      }
      return false;
    };
    rec(rec, 0);
    if (!found.empty()) {
      labels.push_back(found);
      for (int e : found) ground = std::max(ground, e + 1);
    }
    return found;
  }
};

}  // namespace

ApproxSpace build_approx(const DistanceSet& s, int rounds, int budget, std::uint64_t seed,
                         int max_points) {
  if (s.size() == 0) throw std::invalid_argument("build_approx: empty alphabet");
  for (int i = 0; i < s.size(); ++i)
    if (s[i] > Rat(1)) throw std::invalid_argument("build_approx: alphabet values must be <= 1");
  FourValuesResult fv = check_four_values(s);
  if (!fv.ok)
    throw std::invalid_argument("build_approx: alphabet fails the 4-values condition at (" +
                                fv.quad[0].str() + "," + fv.quad[1].str() + "," + fv.quad[2].str() +
                                "," + fv.quad[3].str() + ")");
  if (budget < 1) throw std::invalid_argument("build_approx: budget must be >= 1");

  ApproxSpace out;
  out.space = FiniteMetricSpace(1);
  out.alphabet = s;
  out.rounds = rounds;
  out.budget = budget;
  out.seed = seed;

  SplitMix64 rng(seed);
  int grid = initial_grid_order(s);
  std::optional<SchemeLabels> scheme;
  if (grid > 0 && seed == 0) scheme.emplace(grid);

  for (int round = 0; round < rounds && !out.capped; ++round) {
    const FiniteMetricSpace snapshot = out.space;
    std::vector<std::pair<std::vector<int>, std::vector<Rat>>> profiles;
    for (const std::vector<int>& sub : enumerate_subsets(snapshot.size(), budget)) {
      FiniteMetricSpace base = snapshot.restricted(sub);
      for (std::vector<Rat>& f : enumerate_katetov(base, s.values()))
        profiles.emplace_back(sub, std::move(f));
    }
    if (seed != 0) shuffle(profiles, rng);
    for (const auto& [sub, values] : profiles) {
      if (profile_realized(out.space, sub, values)) continue;
      std::vector<Rat> row;
      if (scheme) {
        std::vector<int> label = scheme->realize(sub, values);
        if (!label.empty()) {
          row.reserve(out.space.size());
          for (int q = 0; q < out.space.size(); ++q)
            row.push_back(scheme->dist(label, scheme->labels[q]));
        }
      } else {
        row = greedy_completion(out.space, sub, values, s, seed ? &rng : nullptr);
      }
      if (row.empty()) continue;  // no consistent completion; retried next round
      if (out.space.size() + 1 > max_points) {
        if (scheme) scheme->labels.pop_back();
        out.capped = true;
        break;
      }
      out.space = adjoin(out.space, row);
    }
    out.round_sizes.push_back(out.space.size());
  }
  return out;
}

std::vector<UnrealizedProfile> check_extension(const ApproxSpace& x, int k) {
  const FiniteMetricSpace& space = x.space;
  if (k > space.size()) throw std::invalid_argument("check_extension: k exceeds space size");
  std::vector<UnrealizedProfile> out;
  if (k == 0) {
    if (space.size() == 0) out.push_back({{}, {}});
    return out;
  }
  for (const std::vector<int>& sub : enumerate_subsets(space.size(), k)) {
    FiniteMetricSpace base = space.restricted(sub);
    for (std::vector<Rat>& f : enumerate_katetov(base, x.alphabet.values()))
      if (!profile_realized(space, sub, f)) out.push_back({sub, std::move(f)});
  }
  return out;
}

BackAndForthResult back_and_forth(const ApproxSpace& a, const ApproxSpace& b, int depth) {
  const FiniteMetricSpace &sa = a.space, &sb = b.space;
  BackAndForthResult res;
  std::vector<char> used_a(sa.size(), 0), used_b(sb.size(), 0);
  for (int step = 0; step < depth; ++step) {
    bool from_a = step % 2 == 0;
    const FiniteMetricSpace& src = from_a ? sa : sb;
    const FiniteMetricSpace& dst = from_a ? sb : sa;
    std::vector<char>& used_src = from_a ? used_a : used_b;
    std::vector<char>& used_dst = from_a ? used_b : used_a;
    int next = 0;
    while (next < src.size() && used_src[next]) ++next;
    if (next == src.size()) {
      res.complete = true;  // one side exhausted with a full match
      return res;
    }
    int image = -1;
    for (int c = 0; c < dst.size() && image < 0; ++c) {
      if (used_dst[c]) continue;
      bool ok = true;
      for (const auto& [pa, pb] : res.pairs) {
        int ps = from_a ? pa : pb;
        int pd = from_a ? pb : pa;
        if (!(dst.d(c, pd) == src.d(next, ps))) {
          ok = false;
          break;
        }
      }
      if (ok) image = c;
    }
    if (image < 0) {
      res.failed_step = step;
      res.failed_side = from_a ? 'a' : 'b';
      return res;
    }
    used_src[next] = 1;
    used_dst[image] = 1;
    res.pairs.emplace_back(from_a ? next : image, from_a ? image : next);
  }
  res.complete = true;
  return res;
}

Rat StepFunctionSpace::sup_distance(int i, int j) const {
  Rat best(0);
  for (std::size_t c = 0; c < functions[i].size(); ++c)
    best = max(best, (functions[i][c] - functions[j][c]).abs());
  return best;
}

StepFunctionSpace kuratowski_embed(const FiniteMetricSpace& x, int m) {
  int n = x.size();
  if (n == 0) throw std::invalid_argument("kuratowski_embed: empty space");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(grid_ceil(x.d(i, j), m).value() == x.d(i, j)))
        throw std::invalid_argument("kuratowski_embed: distances not on the [0,1]_m grid");
  int depth = 0;
  while ((1 << depth) < n) ++depth;
  int cells = 1 << depth;
  StepFunctionSpace out;
  out.depth = depth;
  out.functions.assign(n, std::vector<Rat>(cells));
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < cells; ++c) out.functions[i][c] = x.d(i, std::min(c, n - 1));
  return out;
}

}  // namespace uhs
