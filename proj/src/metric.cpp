#include "uhs/metric.hpp"

#include <algorithm>
#include <stdexcept>

namespace uhs {

std::string Violation::describe() const {
  switch (kind) {
    case Kind::Diagonal:
      return "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0";
    case Kind::Asymmetry:
      return "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" + std::to_string(j) +
             "," + std::to_string(i) + ")";
    case Kind::NonPositive:
      return "d(" + std::to_string(i) + "," + std::to_string(j) + ") <= 0";
    case Kind::AboveOne:
      return "d(" + std::to_string(i) + "," + std::to_string(j) + ") > 1";
    case Kind::Triangle:
      return "triangle(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
             ")";
  }
  return "?";
}

FiniteMetricSpace::FiniteMetricSpace(int n, const Rat& fill) : n_(n) {
  if (n < 0) throw std::invalid_argument("FiniteMetricSpace: negative size");
  d_.assign(static_cast<std::size_t>(n) * n, fill);
  for (int i = 0; i < n; ++i) d_[static_cast<std::size_t>(i) * n + i] = Rat(0);
}

FiniteMetricSpace::FiniteMetricSpace(int n, std::vector<Rat> flat) : n_(n), d_(std::move(flat)) {
  if (n < 0 || d_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("FiniteMetricSpace: matrix size mismatch");
}

void FiniteMetricSpace::set_d(int i, int j, const Rat& v) {
  d_[static_cast<std::size_t>(i) * n_ + j] = v;
  d_[static_cast<std::size_t>(j) * n_ + i] = v;
}

std::vector<Violation> FiniteMetricSpace::validate() const {
  std::vector<Violation> out;
  const Rat zero(0), one(1);
  for (int i = 0; i < n_; ++i)
    if (!d(i, i).is_zero()) out.push_back({Violation::Kind::Diagonal, i, i, -1});
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      if (d(i, j) != d(j, i)) out.push_back({Violation::Kind::Asymmetry, i, j, -1});
      if (d(i, j) <= zero) out.push_back({Violation::Kind::NonPositive, i, j, -1});
      if (d(i, j) > one) out.push_back({Violation::Kind::AboveOne, i, j, -1});
    }
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n_; ++k) {
        if (k == i) continue;
        // d(j,k) <= d(j,i) + d(i,k): i is the middle point.
        if (d(j, k) > d(j, i) + d(i, k)) out.push_back({Violation::Kind::Triangle, j, i, k});
      }
    }
  return out;
}

FiniteMetricSpace FiniteMetricSpace::restricted(const std::vector<int>& idx) const {
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] < 0 || idx[a] >= n_) throw std::out_of_range("restricted: index out of range");
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] == idx[b]) throw std::invalid_argument("restricted: duplicate index");
  }
  int m = static_cast<int>(idx.size());
  FiniteMetricSpace out(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.d_[static_cast<std::size_t>(a) * m + b] = d(idx[a], idx[b]);
  return out;
}

Rat FiniteMetricSpace::diameter() const {
  Rat best(0);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) best = max(best, d(i, j));
  return best;
}

Rat FiniteMetricSpace::min_positive_distance() const {
  Rat best(0);
  bool seen = false;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (d(i, j) > Rat(0) && (!seen || d(i, j) < best)) {
        best = d(i, j);
        seen = true;
      }
  return best;
}

bool distance_preserving(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                         const std::vector<int>& map) {
  if (map.size() != static_cast<std::size_t>(a.size())) return false;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] < 0 || map[i] >= b.size()) return false;
    for (std::size_t j = i + 1; j < map.size(); ++j) {
      if (map[i] == map[j]) return false;
      if (b.d(map[i], map[j]) != a.d(static_cast<int>(i), static_cast<int>(j))) return false;
    }
  }
  return true;
}

namespace {

// Sorted multiset of distances from point p to every point of x.
std::vector<Rat> row_multiset(const FiniteMetricSpace& x, int p) {
  std::vector<Rat> row;
  row.reserve(x.size());
  for (int q = 0; q < x.size(); ++q)
    if (q != p) row.push_back(x.d(p, q));
  std::sort(row.begin(), row.end());
  return row;
}

bool sub_multiset(const std::vector<Rat>& small, const std::vector<Rat>& big) {
  std::size_t bi = 0;
  for (const Rat& v : small) {
    while (bi < big.size() && big[bi] < v) ++bi;
    if (bi >= big.size() || !(big[bi] == v)) return false;
    ++bi;
  }
  return true;
}

struct EmbedSearch {
  const FiniteMetricSpace& a;
  const FiniteMetricSpace& b;
  std::size_t limit;
  std::vector<std::vector<char>> candidate;  // candidate[i][j]: a-point i may map to b-point j
  std::vector<int> map;
  std::vector<char> used;
  std::vector<Isometry> out;

  bool extend(int i) {
    if (i == a.size()) {
      out.push_back({map});
      return out.size() >= limit;
    }
    for (int j = 0; j < b.size(); ++j) {
      if (used[j] || !candidate[i][j]) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p)
        if (b.d(map[p], j) != a.d(p, i)) ok = false;
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  }
};

std::vector<Isometry> find_embeddings_impl(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                           const std::vector<char>* allowed, std::size_t limit) {
  if (limit == 0) return {};
  if (a.size() == 0) return {Isometry{{}}};
  if (a.size() > b.size()) return {};

  EmbedSearch s{a, b, limit, {}, {}, {}, {}};
  std::vector<std::vector<Rat>> arows(a.size()), brows(b.size());
  for (int i = 0; i < a.size(); ++i) arows[i] = row_multiset(a, i);
  for (int j = 0; j < b.size(); ++j) brows[j] = row_multiset(b, j);
  s.candidate.assign(a.size(), std::vector<char>(b.size(), 0));
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j) {
      if (allowed && !(*allowed)[j]) continue;
      s.candidate[i][j] = sub_multiset(arows[i], brows[j]) ? 1 : 0;
    }
  s.map.assign(a.size(), -1);
  s.used.assign(b.size(), 0);
  s.extend(0);
  return std::move(s.out);
}

}  // namespace

std::vector<Isometry> find_embeddings(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                      std::size_t limit) {
  return find_embeddings_impl(a, b, nullptr, limit);
}

std::vector<Isometry> find_embeddings_into(const FiniteMetricSpace& a, const FiniteMetricSpace& b,
                                           const std::vector<char>& allowed, std::size_t limit) {
  if (allowed.size() != static_cast<std::size_t>(b.size()))
    throw std::invalid_argument("find_embeddings_into: mask size mismatch");
  return find_embeddings_impl(a, b, &allowed, limit);
}

}  // namespace uhs
