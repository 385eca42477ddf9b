#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "uhs/rational.hpp"

namespace uhs {

/// Strictly increasing set of positive rationals (alphabet of distances).
class DistanceSet {
 public:
  DistanceSet() = default;
  explicit DistanceSet(std::vector<Rat> values);  // throws unless increasing and positive
  static DistanceSet parse(const std::string& comma_separated);

  int size() const { return static_cast<int>(values_.size()); }
  const Rat& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& values() const { return values_; }
  bool contains(const Rat& v) const;
  std::string str() const;

  bool operator==(const DistanceSet&) const = default;

 private:
  std::vector<Rat> values_;
};

/// The cube of comparisons s_i <= s_j + s_k, symmetric in (j,k). Two sets are
/// similar iff they have the same size and the same pattern.
class TrianglePattern {
 public:
  TrianglePattern() = default;
  TrianglePattern(int m, std::vector<char> bits);  // row-major i*m*m + j*m + k
  int size() const { return m_; }
  bool get(int i, int j, int k) const { return bits_[idx(i, j, k)] != 0; }
  void set(int i, int j, int k, bool v);

  /// 0/1 string over the full cube, row-major; stable across runs.
  std::string key() const;

  bool operator==(const TrianglePattern&) const = default;
  bool operator<(const TrianglePattern& o) const;

 private:
  std::size_t idx(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * m_ + j) * m_ + k;
  }
  int m_ = 0;
  std::vector<char> bits_;
};

TrianglePattern pattern_of(const DistanceSet& s);
TrianglePattern pattern_of_ints(const std::vector<long long>& s);  // s strictly increasing > 0

bool similar(const DistanceSet& s, const DistanceSet& t);

/// Exhaustive scan of the 4-values condition. On failure, quad holds the first
/// failing quadruple (s_0, s_1, s_0', s_1') in lexicographic index order and
/// t the witness distance that admits no amalgamating u.
struct FourValuesResult {
  bool ok = true;
  std::array<Rat, 4> quad{};
  Rat t;
};
FourValuesResult check_four_values(const DistanceSet& s);

/// Integer realization of a pattern, or infeasibility. Decided by exact
/// Fourier-Motzkin elimination on the strict/non-strict system with one shared
/// slack for strictness; the representative is the bounded-search canonical
/// one (smallest maximum value, then lexicographically least vector).
struct Realization {
  bool feasible = false;
  std::vector<long long> representative;
};
Realization realize_pattern(const TrianglePattern& p);

struct ClassInfo {
  TrianglePattern pattern;
  std::vector<long long> representative;
  bool four_values = false;
};

struct ClassificationReport {
  int m = 0;
  std::vector<ClassInfo> classes;  // sorted by (max of representative, vector)
  int four_values_count = 0;
};

/// All realizable similarity classes of size-m distance sets, with canonical
/// integer representatives and 4-values verdicts.
ClassificationReport classify(int m);

}  // namespace uhs
