#include <doctest.h>

#include "support.hpp"
#include "uhs/discretize.hpp"
#include "uhs/hedgehog.hpp"

using namespace uhs;
using test::space_from_upper;

namespace {

HedgehogGraph build_from_fine(const FiniteMetricSpace& fine, int m, int max_tree) {
  return build_z(fine, ceil_metric(fine, m), m, max_tree);
}

void verify_instance(const FiniteMetricSpace& fine, int m, int max_tree) {
  HedgehogGraph g = build_from_fine(fine, m, max_tree);
  std::vector<std::vector<Rat>> dz = path_metric(g);
  int n = g.vertex_count();

  // d^Z extends delta exactly.
  CHECK(delta_mismatches(g, dz).empty());

  // d^Z is a metric with values in [0,1].
  for (int i = 0; i < n; ++i) {
    CHECK(dz[i][i].is_zero());
    for (int j = 0; j < n; ++j) {
      CHECK(dz[i][j] == dz[j][i]);
      if (i != j) CHECK(dz[i][j] > Rat(0));
      CHECK(dz[i][j] <= Rat(1));
      for (int k = 0; k < n; ++k) CHECK(dz[i][k] <= dz[i][j] + dz[j][k]);
    }
  }

  // Cycle lemmas hold with zero violations.
  CycleCensus census = classify_cycles(g);
  CHECK(census.violation_count == 0);

  // Branches are isometric fine prefixes, 1/m from their projections.
  for (const std::vector<int>& chain : maximal_branches(g)) {
    BranchReport rep = branch_cover_check(g, chain, dz);
    CHECK(rep.isometric);
    CHECK(rep.projections_ok);
  }
}

}  // namespace

TEST_CASE("single ambient point gives one node and one 1/m edge") {
  FiniteMetricSpace one(1);
  HedgehogGraph g = build_from_fine(one, 2, 3);
  CHECK(g.vertex_count() == 2);
  CHECK(g.node_count() == 1);
  REQUIRE(g.has_edge(0, 1));
  CHECK(g.label(0, 1) == Rat(1, 2));
  CHECK(g.projection(1) == 0);
}

TEST_CASE("tree nodes are exactly the coarse-isometry-coherent index sets") {
  // Fixed 3-point fine space at m=2: rounded distances (0,1)->1/2, (0,2)->1,
  // (1,2)->1/2.
  FiniteMetricSpace fine = space_from_upper(3, {Rat(3, 10), Rat(9, 10), Rat(1, 2)});
  HedgehogGraph g = build_from_fine(fine, 2, 3);
  const FiniteMetricSpace& coarse = g.coarse();
  REQUIRE(coarse.d(0, 1) == Rat(1, 2));
  REQUIRE(coarse.d(0, 2) == Rat(1));
  REQUIRE(coarse.d(1, 2) == Rat(1, 2));
  auto has_node = [&](const std::vector<int>& want) {
    for (int v = g.point_count(); v < g.vertex_count(); ++v)
      if (g.node_set(v) == want) return true;
    return false;
  };
  CHECK(has_node({0}));
  CHECK(has_node({1}));
  CHECK(has_node({2}));
  CHECK(has_node({0, 1}));        // identity prefix
  CHECK_FALSE(has_node({0, 2}));  // d(x_0,x_2) = 1 != 1/2 = d(x_0,x_1)
  CHECK(has_node({1, 2}));        // d(x_1,x_2) = 1/2 = d(x_0,x_1)
  CHECK(has_node({0, 1, 2}));     // the identity map is always an isometry

}

TEST_CASE("comparable nodes carry the fine distance of their heights") {
  FiniteMetricSpace fine = space_from_upper(3, {Rat(3, 10), Rat(9, 10), Rat(1, 2)});
  HedgehogGraph g = build_from_fine(fine, 2, 3);
  int n01 = -1, n0 = -1;
  for (int v = g.point_count(); v < g.vertex_count(); ++v) {
    if (g.node_set(v) == std::vector<int>{0, 1}) n01 = v;
    if (g.node_set(v) == std::vector<int>{0}) n0 = v;
  }
  REQUIRE(n01 >= 0);
  REQUIRE(n0 >= 0);
  REQUIRE(g.has_edge(n0, n01));
  CHECK(g.label(n0, n01) == fine.d(0, 1));  // heights 0 and 1
  // Incomparable nodes are not connected.
  int n1 = -1;
  for (int v = g.point_count(); v < g.vertex_count(); ++v)
    if (g.node_set(v) == std::vector<int>{1}) n1 = v;
  REQUIRE(n1 >= 0);
  CHECK_FALSE(g.has_edge(n0, n1));
}

TEST_CASE("path metric equals the coarse metric between points and 1/m to projections") {
  FiniteMetricSpace fine = space_from_upper(3, {Rat(3, 10), Rat(9, 10), Rat(1, 2)});
  HedgehogGraph g = build_from_fine(fine, 2, 3);
  std::vector<std::vector<Rat>> dz = path_metric(g);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(dz[i][j] == g.coarse().d(i, j));
  for (int v = g.point_count(); v < g.vertex_count(); ++v)
    CHECK(dz[v][g.projection(v)] == Rat(1, 2));
}

TEST_CASE("mismatched fine/coarse input is rejected") {
  FiniteMetricSpace fine = space_from_upper(2, {Rat(3, 10)});
  FiniteMetricSpace wrong = space_from_upper(2, {Rat(1)});
  CHECK_THROWS_AS(build_z(fine, wrong, 2, 2), std::invalid_argument);
}

TEST_CASE("cycle enumeration matches a brute-force chordless census") {
  SplitMix64 rng(90210);
  FiniteMetricSpace fine = test::random_grid_space(4, 10, rng);
  REQUIRE(fine.validate().empty());
  HedgehogGraph g = build_from_fine(fine, 2, 3);
  int n = g.vertex_count();
  REQUIRE(n <= 22);

  // Brute force: every vertex subset of size 3..6, every cyclic order with the
  // minimum first and direction fixed, consecutive edges present, no chords.
  long long brute = 0;
  std::vector<int> subset;
  auto consider = [&](const std::vector<int>& verts) {
    std::vector<int> perm(verts.begin() + 1, verts.end());
    std::sort(perm.begin(), perm.end());
    do {
      if (perm.back() < perm.front()) continue;  // direction canonicalization
      std::vector<int> cyc{verts.front()};
      cyc.insert(cyc.end(), perm.begin(), perm.end());
      int len = static_cast<int>(cyc.size());
      bool ok = true;
      for (int i = 0; i < len && ok; ++i)
        for (int j = i + 1; j < len && ok; ++j) {
          bool adjacent_in_cycle = (j == i + 1) || (i == 0 && j == len - 1);
          if (g.has_edge(cyc[i], cyc[j]) != adjacent_in_cycle) ok = false;
        }
      if (ok) ++brute;
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  auto rec = [&](auto&& self, int next, int want) -> void {
    if (static_cast<int>(subset.size()) == want) {
      consider(subset);
      return;
    }
    for (int v = next; v < n; ++v) {
      subset.push_back(v);
      self(self, v + 1, want);
      subset.pop_back();
    }
  };
  for (int len = 3; len <= 6; ++len) rec(rec, 0, len);

  CycleCensus census = classify_cycles(g, 6);
  CHECK(static_cast<long long>(census.cycles.size()) == brute);
  CHECK(census.violation_count == 0);
}

TEST_CASE("full verification on random instances, m in {2,3}") {
  SplitMix64 rng(20250101);
  for (int t = 0; t < 6; ++t) {
    int n = 3 + static_cast<int>(rng.below(4));
    FiniteMetricSpace fine = test::random_grid_space(n, 12, rng);
    verify_instance(fine, 2, 3);
    verify_instance(fine, 3, 3);
  }
}

TEST_CASE("uniform fine space: everything is comparable-rich and still verifies") {
  // All distances 5/12 round to 1/2 at m=2; T is the full subset tree.
  FiniteMetricSpace fine = space_from_upper(4, {Rat(5, 12), Rat(5, 12), Rat(5, 12), Rat(5, 12),
                                                Rat(5, 12), Rat(5, 12)});
  verify_instance(fine, 2, 4);
}
