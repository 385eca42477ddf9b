#include <doctest.h>

#include <functional>

#include "support.hpp"
#include "uhs/discretize.hpp"
#include "uhs/katetov.hpp"

using namespace uhs;
using test::space_from_upper;

namespace {

// Product-filter oracle, independent of the backtracking enumerator.
std::vector<std::vector<Rat>> product_filter_oracle(const FiniteMetricSpace& x,
                                                    const std::vector<Rat>& values) {
  std::vector<std::vector<Rat>> out;
  std::vector<std::size_t> pick(x.size(), 0);
  while (true) {
    std::vector<Rat> f;
    for (std::size_t p : pick) f.push_back(values[p]);
    if (is_katetov(x, f)) out.push_back(f);
    int i = x.size() - 1;
    while (i >= 0 && ++pick[i] == values.size()) pick[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

// All valid spaces with n points and off-diagonal entries in {1/m..m/m},
// enumerated by upper-triangle assignment.
void for_each_grid_space(int n, int m, const std::function<void(const FiniteMetricSpace&)>& fn) {
  int entries = n * (n - 1) / 2;
  std::vector<int> pick(entries, 1);
  while (true) {
    std::vector<Rat> upper;
    for (int p : pick) upper.emplace_back(p, m);
    FiniteMetricSpace x = test::space_from_upper(n, upper);
    if (x.validate().empty()) fn(x);
    int i = entries - 1;
    while (i >= 0 && ++pick[i] > m) pick[i--] = 1;
    if (i < 0) break;
  }
}

std::vector<Rat> grid_values(int m) {
  std::vector<Rat> s;
  for (int k = 1; k <= m; ++k) s.emplace_back(k, m);
  return s;
}

}  // namespace

TEST_CASE("is_katetov two-sided inequality") {
  FiniteMetricSpace one(1);
  CHECK(is_katetov(one, {Rat(1, 3)}));
  FiniteMetricSpace far = space_from_upper(2, {Rat(1)});
  CHECK_FALSE(is_katetov(far, {Rat(1, 3), Rat(1, 3)}));  // 1 > 1/3 + 1/3
  FiniteMetricSpace mid = space_from_upper(2, {Rat(1, 2)});
  CHECK(is_katetov(mid, {Rat(1, 2), Rat(1)}));
  CHECK_FALSE(is_katetov(mid, {Rat(0), Rat(1, 2)}));  // values must be positive
  CHECK_THROWS_AS(is_katetov(mid, {Rat(1, 2)}), std::invalid_argument);
}

TEST_CASE("extend_with realizes the profile") {
  FiniteMetricSpace one(1);
  FiniteMetricSpace two = extend_with(one, {Rat(1, 3)});
  CHECK(two.size() == 2);
  CHECK(two.d(0, 1) == Rat(1, 3));

  FiniteMetricSpace pair = space_from_upper(2, {Rat(1, 2)});
  FiniteMetricSpace iso = extend_with(pair, {Rat(1, 2), Rat(1, 2)});
  CHECK(iso.validate().empty());
  CHECK(iso.restricted({0, 1}) == pair);  // round-trip

  CHECK_THROWS_AS(extend_with(space_from_upper(2, {Rat(1)}), {Rat(1, 3), Rat(1, 3)}),
                  std::invalid_argument);
}

TEST_CASE("enumerate_katetov examples") {
  SUBCASE("single point: every positive value works") {
    FiniteMetricSpace one(1);
    auto maps = enumerate_katetov(one, {Rat(1, 2), Rat(1)});
    REQUIRE(maps.size() == 2);
    CHECK(maps[0] == std::vector<Rat>{Rat(1, 2)});
    CHECK(maps[1] == std::vector<Rat>{Rat(1)});
  }
  SUBCASE("pair at distance 1 over thirds: oracle count") {
    FiniteMetricSpace far = space_from_upper(2, {Rat(1)});
    std::vector<Rat> s{Rat(1, 3), Rat(2, 3), Rat(1)};
    auto maps = enumerate_katetov(far, s);
    auto oracle = product_filter_oracle(far, s);
    CHECK(maps == oracle);
    // Only (1/3,1/3) fails the sum side; the 8 other pairs survive.
    CHECK(maps.size() == 8);
  }
  SUBCASE("pair at 1/2 with the single value 1/2") {
    FiniteMetricSpace mid = space_from_upper(2, {Rat(1, 2)});
    auto maps = enumerate_katetov(mid, {Rat(1, 2)});
    REQUIRE(maps.size() == 1);
    CHECK(maps[0] == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
  }
}

TEST_CASE("enumerate_katetov equals the product-filter oracle on all small grid spaces") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n)
      for_each_grid_space(n, m, [&](const FiniteMetricSpace& x) {
        CHECK(enumerate_katetov(x, grid_values(m)) == product_filter_oracle(x, grid_values(m)));
      });
}

TEST_CASE("every enumerated map extends to a valid space (m <= 4, n <= 4)") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for_each_grid_space(n, m, [&](const FiniteMetricSpace& x) {
        for (const std::vector<Rat>& f : enumerate_katetov(x, grid_values(m)))
          CHECK(extend_with(x, f).validate().empty());
      });
}

TEST_CASE("claim_map formulas and the Katetov guarantee") {
  SUBCASE("single point at 3/10, m = 2") {
    FiniteMetricSpace one(1);
    ClaimMap cm = claim_map(one, {Rat(3, 10)}, 2);
    CHECK(cm.on_base == std::vector<Rat>{Rat(1, 2)});
    CHECK(cm.at_new == Rat(1, 5));
    CHECK_FALSE(cm.grid_aligned());
  }
  SUBCASE("grid-aligned distances are reported, not mapped") {
    FiniteMetricSpace one(1);
    ClaimMap cm = claim_map(one, {Rat(1, 2)}, 2);
    CHECK(cm.grid_aligned());
  }
  SUBCASE("pair at 1/2, y at 1/4 from both, m = 2") {
    FiniteMetricSpace pair = space_from_upper(2, {Rat(1, 2)});
    ClaimMap cm = claim_map(pair, {Rat(1, 4), Rat(1, 4)}, 2);
    CHECK(cm.on_base == std::vector<Rat>{Rat(1, 2), Rat(1, 2)});
    CHECK(cm.at_new == Rat(1, 4));
  }
  SUBCASE("off-grid base is rejected") {
    FiniteMetricSpace off = space_from_upper(2, {Rat(1, 3)});
    CHECK_THROWS_AS(claim_map(off, {Rat(1, 2), Rat(1, 2)}, 2), std::invalid_argument);
  }
}

TEST_CASE("claim_map output is Katetov over base u {y} on random configurations") {
  // Random grid-valued base, extended by a random fine-valued Katetov point:
  // exactly the precondition of the claim. 10^4 configurations.
  SplitMix64 rng(424242);
  int done = 0;
  while (done < 10000) {
    int m = 2 + static_cast<int>(rng.below(3));
    int n = 1 + static_cast<int>(rng.below(4));
    FiniteMetricSpace base = test::random_grid_space(n, m, rng);
    // Random ambient position for y on a finer grid, via rejection.
    int fine = m * (2 + static_cast<int>(rng.below(5)));
    std::vector<Rat> dist;
    for (int i = 0; i < n; ++i) dist.emplace_back(1 + static_cast<int>(rng.below(fine)), fine);
    if (!is_katetov(base, dist)) continue;
    ClaimMap cm = claim_map(base, dist, m);  // throws on a failed Katetov check
    if (!cm.grid_aligned()) {
      std::vector<Rat> f = cm.on_base;
      f.push_back(cm.at_new);
      CHECK(is_katetov(extend_with(base, dist), f));
    }
    ++done;
  }
}
