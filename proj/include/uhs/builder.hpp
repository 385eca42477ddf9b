#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "uhs/distance_sets.hpp"
#include "uhs/metric.hpp"

namespace uhs {

/// A finite approximation built by rounds of one-point extensions; the whole
/// construction replays deterministically from (alphabet, rounds, budget, seed).
struct ApproxSpace {
  FiniteMetricSpace space;
  DistanceSet alphabet;
  int rounds = 0;
  int budget = 0;
  std::uint64_t seed = 0;
  bool capped = false;             // stopped early at the point cap
  std::vector<int> round_sizes;    // space size after each completed round
};

inline constexpr int kDefaultPointCap = 200;

/// From one point, each round enumerates every Katetov profile with values in
/// `s` over every subspace of the round-start space with at most `budget`
/// points and adjoins a realizer for each profile no existing point realizes.
///
/// Realizer distances outside the profile:
///  - seed 0, alphabet {1/m,...,1}: scheme-guided - realizers are fresh
///    m-subset labels under the Johnson metric (m - |intersection|)/m. This
///    is the mode whose rounds actually drain the unrealized-profile set;
///    value-by-value completions starve the small-distance graph and diverge.
///  - seed 0, other alphabets: greedy least consistent value in point order.
///  - seed != 0: stress mode - profile order shuffled, completion values
///    seed-chosen among the consistent ones.
/// Profiles with no consistent completion wait for the next round. Throws if
/// `s` fails the 4-values condition or contains values outside (0,1].
ApproxSpace build_approx(const DistanceSet& s, int rounds, int budget, std::uint64_t seed,
                         int max_points = kDefaultPointCap);

struct UnrealizedProfile {
  std::vector<int> subspace;
  std::vector<Rat> values;
  bool operator==(const UnrealizedProfile&) const = default;
};

/// All alphabet-valued Katetov profiles over subspaces of at most k points
/// that no point of the space realizes; empty = extension property at depth k.
/// A realizer may be any point outside the subspace.
std::vector<UnrealizedProfile> check_extension(const ApproxSpace& x, int k);

struct BackAndForthResult {
  std::vector<std::pair<int, int>> pairs;  // (index in a, index in b)
  bool complete = false;
  int failed_step = -1;
  char failed_side = ' ';  // 'a' or 'b': side that could not be matched
};

/// Greedy alternating partial-isometry search, always taking the least-index
/// valid image, up to `depth` matched points.
BackAndForthResult back_and_forth(const ApproxSpace& a, const ApproxSpace& b, int depth);

/// Step functions on a dyadic partition with the sup metric; the image of a
/// Kuratowski embedding of a grid-valued space.
struct StepFunctionSpace {
  int depth = 0;  // 2^depth cells
  std::vector<std::vector<Rat>> functions;
  Rat sup_distance(int i, int j) const;
  int size() const { return static_cast<int>(functions.size()); }
};

/// x_i -> (p -> d(x_i, x_cell(p))) with cell anchors x_0..x_{n-1} padded by the
/// last point; the sup distance between images equals the original distance
/// exactly. Distances must lie on [0,1]_m.
StepFunctionSpace kuratowski_embed(const FiniteMetricSpace& x, int m);

}  // namespace uhs
