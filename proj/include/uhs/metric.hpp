#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "uhs/rational.hpp"

namespace uhs {

/// One failed invariant of a FiniteMetricSpace, naming the offending pair/triple.
struct Violation {
  enum class Kind { Diagonal, Asymmetry, NonPositive, AboveOne, Triangle };
  Kind kind;
  int i = -1, j = -1, k = -1;
  std::string describe() const;
};

/// Finite metric space over exact rationals. Points are positional indices;
/// all distances are expected to lie in [0,1].
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  /// n points, all off-diagonal entries set to `fill`.
  explicit FiniteMetricSpace(int n, const Rat& fill = Rat(0));

  /// Row-major n*n matrix.
  FiniteMetricSpace(int n, std::vector<Rat> flat);

  int size() const { return n_; }
  const Rat& d(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  void set_d(int i, int j, const Rat& v);  // keeps the matrix symmetric

  /// Empty iff every invariant holds: zero diagonal, symmetry, positive
  /// off-diagonal entries, range [0,1], triangle inequality (full triple scan).
  std::vector<Violation> validate() const;
  bool is_valid() const { return validate().empty(); }

  /// Induced subspace on the given (distinct, in-range) indices.
  FiniteMetricSpace restricted(const std::vector<int>& idx) const;

  Rat diameter() const;
  Rat min_positive_distance() const;

  bool operator==(const FiniteMetricSpace&) const = default;

 private:
  int n_ = 0;
  std::vector<Rat> d_;
};

/// Injective index mapping from a source space into a target space.
struct Isometry {
  std::vector<int> map;
};

/// True iff map is injective and d_b(map[i],map[j]) == d_a(i,j) for all i,j.
bool distance_preserving(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                         const std::vector<int>& map);

/// Up to `limit` distance-preserving injections a -> b, in lexicographic order
/// of the mapping vector. Backtracking with distance-row multiset pruning.
std::vector<Isometry> find_embeddings(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                      std::size_t limit = static_cast<std::size_t>(-1));

/// find_embeddings restricted to target points with allowed[j] set; used by
/// the coloring searches. Mappings are still indices into b.
std::vector<Isometry> find_embeddings_into(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                           const std::vector<char>& allowed, std::size_t limit);

}  // namespace uhs
