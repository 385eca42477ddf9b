#include "uhs/ramsey.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "uhs/util.hpp"

namespace uhs {

Coloring random_coloring(int n, int k, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("random_coloring: k must be >= 1");
  SplitMix64 rng(seed);
  Coloring c{k, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) c.color[i] = static_cast<int>(rng.below(k));
  return c;
}

Coloring parity_coloring(int n, int k) {
  if (k < 1) throw std::invalid_argument("parity_coloring: k must be >= 1");
  Coloring c{k, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) c.color[i] = i % k;
  return c;
}

Coloring adversarial_coloring(const FiniteMetricSpace& x, int k) {
  if (k < 1) throw std::invalid_argument("adversarial_coloring: k must be >= 1");
  int n = x.size();
  Coloring c{k, std::vector<int>(n, 0)};
  if (n == 0) return c;
  Rat step = x.min_positive_distance();
  for (int p = 0; p < n; ++p) {
    int best_color = 0, best_clique = n + 1;
    for (int col = 0; col < k; ++col) {
      // Greedy clique in the min-distance graph through p over earlier points.
      std::vector<int> clique{p};
      for (int q = 0; q < p; ++q) {
        if (c.color[q] != col) continue;
        bool joins = true;
        for (int r : clique)
          if (!(x.d(q, r) == step)) joins = false;
        if (joins) clique.push_back(q);
      }
      int size = static_cast<int>(clique.size());
      if (size < best_clique) {
        best_clique = size;
        best_color = col;
      }
    }
    c.color[p] = best_color;
  }
  return c;
}

std::vector<std::vector<int>> epsilon_components(const FiniteMetricSpace& x, const Rat& eps) {
  if (!(eps > Rat(0))) throw std::invalid_argument("epsilon_components: eps must be positive");
  int n = x.size();
  std::vector<int> root(n);
  for (int i = 0; i < n; ++i) root[i] = i;
  auto find = [&](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (x.d(i, j) <= eps) root[find(i)] = find(j);
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(i);
  }
  return comps;
}

Rat lambda_eps(const FiniteMetricSpace& x, int p, const Rat& eps) {
  if (p < 0 || p >= x.size()) throw std::out_of_range("lambda_eps: point out of range");
  for (const std::vector<int>& comp : epsilon_components(x, eps)) {
    if (std::find(comp.begin(), comp.end(), p) == comp.end()) continue;
    Rat best(0);
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        best = max(best, min(x.d(comp[a], comp[b]), Rat(1)));
    return best;
  }
  throw std::logic_error("lambda_eps: point not in any component");
}

Rat lambda_over_grid(const FiniteMetricSpace& x, int p, const std::vector<Rat>& eps_grid) {
  if (eps_grid.empty()) throw std::invalid_argument("lambda_over_grid: empty grid");
  Rat best = lambda_eps(x, p, eps_grid.front());
  for (std::size_t i = 1; i < eps_grid.size(); ++i)
    best = min(best, lambda_eps(x, p, eps_grid[i]));
  return best;
}

std::vector<std::pair<Rat, Rat>> lambda_curve(const FiniteMetricSpace& x, int p,
                                              const std::vector<Rat>& eps_grid) {
  std::vector<std::pair<Rat, Rat>> curve;
  curve.reserve(eps_grid.size());
  for (const Rat& eps : eps_grid) curve.emplace_back(eps, lambda_eps(x, p, eps));
  return curve;
}

namespace {

std::vector<char> fattened_class(const FiniteMetricSpace& x, const Coloring& chi, int color,
                                 const Rat& eps) {
  int n = x.size();
  std::vector<char> in(n, 0);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n && !in[p]; ++q)
      if (chi.color[q] == color && (p == q ? Rat(0) : x.d(p, q)) <= eps) in[p] = 1;
  return in;
}

}  // namespace

std::optional<EmbeddingWitness> find_mono_copy(const FiniteMetricSpace& x, const Coloring& chi,
                                               const FiniteMetricSpace& target, const Rat& eps) {
  if (chi.color.size() != static_cast<std::size_t>(x.size()))
    throw std::invalid_argument("find_mono_copy: coloring size mismatch");
  if (eps < Rat(0)) throw std::invalid_argument("find_mono_copy: eps must be >= 0");
  for (int color = 0; color < chi.k; ++color) {
    std::vector<char> allowed = fattened_class(x, chi, color, eps);
    std::vector<Isometry> found = find_embeddings_into(target, x, allowed, 1);
    if (found.empty()) continue;
    EmbeddingWitness w{color, found.front()};
    // Independent re-verification of the witness.
    if (!distance_preserving(target, x, w.embedding.map))
      throw std::logic_error("find_mono_copy: witness failed isometry re-check");
    for (int p : w.embedding.map)
      if (!allowed[p]) throw std::logic_error("find_mono_copy: witness left the fattened class");
    return w;
  }
  return std::nullopt;
}

std::vector<ExperimentRow> run_experiment(const FiniteMetricSpace& x,
                                          const std::vector<FiniteMetricSpace>& targets,
                                          const Rat& eps, int k, std::uint64_t seed_lo,
                                          std::uint64_t seed_hi) {
  if (seed_hi < seed_lo) throw std::invalid_argument("run_experiment: bad seed range");
  struct Task {
    std::uint64_t seed;
    std::string kind;
    Coloring chi;
  };
  std::vector<Task> tasks;
  for (std::uint64_t s = seed_lo; s <= seed_hi; ++s)
    tasks.push_back({s, "random", random_coloring(x.size(), k, s)});
  tasks.push_back({0, "adversarial", adversarial_coloring(x, k)});
  tasks.push_back({0, "parity", parity_coloring(x.size(), k)});

  std::vector<ExperimentRow> rows(tasks.size() * targets.size());
  parallel_for(tasks.size(), [&](std::size_t ti) {
    for (std::size_t tg = 0; tg < targets.size(); ++tg) {
      auto t0 = std::chrono::steady_clock::now();
      std::optional<EmbeddingWitness> w = find_mono_copy(x, tasks[ti].chi, targets[tg], eps);
      auto t1 = std::chrono::steady_clock::now();
      ExperimentRow row;
      row.seed = tasks[ti].seed;
      row.coloring_kind = tasks[ti].kind;
      row.k = k;
      row.eps = eps;
      row.target_id = static_cast<int>(tg);
      row.found = w.has_value();
      if (w) {
        row.color = w->color;
        int mx = -1;
        for (int p : w->embedding.map) mx = std::max(mx, p);
        row.witness_size = mx + 1;
      }
      row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
      rows[ti * targets.size() + tg] = std::move(row);
    }
  });
  return rows;
}

}  // namespace uhs
