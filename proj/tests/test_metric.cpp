#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "uhs/metric.hpp"

using namespace uhs;
using test::space_from_upper;

TEST_CASE("validate accepts metric matrices and names offenders") {
  SUBCASE("one-distance pair is metric") {
    FiniteMetricSpace x = space_from_upper(2, {Rat(1, 2)});
    CHECK(x.validate().empty());
  }
  SUBCASE("broken triangle is reported as a triple") {
    FiniteMetricSpace x = space_from_upper(3, {Rat(1, 4), Rat(1), Rat(1, 4)});
    auto v = x.validate();
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::Kind::Triangle);
    CHECK(v[0].describe() == "triangle(0,1,2)");
  }
  SUBCASE("degenerate triangle is allowed") {
    FiniteMetricSpace x = space_from_upper(3, {Rat(1, 3), Rat(2, 3), Rat(1, 3)});
    CHECK(x.validate().empty());
  }
  SUBCASE("zero off-diagonal and oversized entries are violations") {
    FiniteMetricSpace x = space_from_upper(2, {Rat(0)});
    CHECK(!x.validate().empty());
    FiniteMetricSpace y = space_from_upper(2, {Rat(3, 2)});
    CHECK(!y.validate().empty());
  }
}

TEST_CASE("validate agrees with an independent brute-force scan on random grids") {
  SplitMix64 rng(20240809);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    int grid = 1 + static_cast<int>(rng.below(6));
    FiniteMetricSpace x(n);
    // Raw random matrices: roughly half will violate something.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        x.set_d(i, j, Rat(static_cast<int>(rng.below(grid + 1)), grid));
    CHECK(x.validate().empty() == test::brute_force_is_metric(x));
  }
}

TEST_CASE("restricted returns the induced subspace") {
  FiniteMetricSpace x = space_from_upper(
      4, {Rat(1, 2), Rat(1, 3), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 3)});
  REQUIRE(x.validate().empty());
  SUBCASE("all indices is the identity") {
    CHECK(x.restricted({0, 1, 2, 3}) == x);
  }
  SUBCASE("singleton") {
    CHECK(x.restricted({2}).size() == 1);
  }
  SUBCASE("pair keeps its distance") {
    FiniteMetricSpace sub = x.restricted({0, 2});
    CHECK(sub.size() == 2);
    CHECK(sub.d(0, 1) == x.d(0, 2));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(x.restricted({0, 4}), std::out_of_range);
    CHECK_THROWS_AS(x.restricted({1, 1}), std::invalid_argument);
  }
}

TEST_CASE("find_embeddings basics") {
  SUBCASE("single point embeds everywhere") {
    FiniteMetricSpace a(1);
    FiniteMetricSpace b = space_from_upper(3, {Rat(1, 2), Rat(1), Rat(1, 2)});
    CHECK(find_embeddings(a, b).size() == 3);
  }
  SUBCASE("pair at equal distance embeds both ways") {
    FiniteMetricSpace a = space_from_upper(2, {Rat(1, 2)});
    auto found = find_embeddings(a, a);
    REQUIRE(found.size() == 2);
    CHECK(found[0].map == std::vector<int>{0, 1});  // lexicographic order
    CHECK(found[1].map == std::vector<int>{1, 0});
  }
  SUBCASE("unique equilateral triangle in a fixed 5-point space / 6 embeddings") {
    FiniteMetricSpace a =
        space_from_upper(3, {Rat(1, 3), Rat(1, 3), Rat(1, 3)});
    FiniteMetricSpace b = space_from_upper(
        5, {Rat(1, 3), Rat(1, 3), Rat(2, 3), Rat(2, 3),
            Rat(1, 3), Rat(2, 3), Rat(2, 3),
            Rat(2, 3), Rat(2, 3),
            Rat(1, 3)});
    REQUIRE(b.validate().empty());
    CHECK(find_embeddings(a, b).size() == 6);
    CHECK(test::brute_force_embedding_count(a, b) == 6);
  }
  SUBCASE("limit truncates deterministically") {
    FiniteMetricSpace a(1);
    FiniteMetricSpace b = space_from_upper(3, {Rat(1, 2), Rat(1), Rat(1, 2)});
    auto found = find_embeddings(a, b, 2);
    REQUIRE(found.size() == 2);
    CHECK(found[0].map == std::vector<int>{0});
    CHECK(found[1].map == std::vector<int>{1});
  }
}

TEST_CASE("find_embeddings matches exhaustive enumeration and preserves distances") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int na = 1 + static_cast<int>(rng.below(4));
    int nb = na + static_cast<int>(rng.below(static_cast<uint64_t>(8 - na)));
    FiniteMetricSpace b = test::random_grid_space(nb, 3, rng);
    std::vector<int> idx(nb);
    for (int i = 0; i < nb; ++i) idx[i] = i;
    uhs::shuffle(idx, rng);
    idx.resize(na);
    FiniteMetricSpace a = b.restricted(idx);
    auto found = find_embeddings(a, b);
    CHECK(static_cast<int>(found.size()) == test::brute_force_embedding_count(a, b));
    CHECK(found.size() >= 1);  // a is an actual subspace
    for (const Isometry& iso : found) CHECK(distance_preserving(a, b, iso.map));
    // Lexicographic order of the mapping vectors.
    for (std::size_t t = 1; t < found.size(); ++t) CHECK(found[t - 1].map < found[t].map);
  }
}
