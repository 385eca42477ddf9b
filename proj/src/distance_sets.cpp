#include "uhs/distance_sets.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>

#include "uhs/util.hpp"

namespace uhs {

namespace mp = boost::multiprecision;
using BigInt = mp::cpp_int;
using BigRat = mp::cpp_rational;

DistanceSet::DistanceSet(std::vector<Rat> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] > Rat(0))) throw std::invalid_argument("DistanceSet: values must be positive");
    if (i > 0 && !(values_[i - 1] < values_[i]))
      throw std::invalid_argument("DistanceSet: values must be strictly increasing");
  }
}

DistanceSet DistanceSet::parse(const std::string& comma_separated) {
  std::vector<Rat> vals;
  std::stringstream ss(comma_separated);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("DistanceSet: empty entry");
    vals.push_back(Rat::parse(item.substr(a, b - a + 1)));
  }
  std::sort(vals.begin(), vals.end());
  return DistanceSet(std::move(vals));
}

bool DistanceSet::contains(const Rat& v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::string DistanceSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += values_[i].str();
  }
  return out;
}

TrianglePattern::TrianglePattern(int m, std::vector<char> bits) : m_(m), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(m) * m * m)
    throw std::invalid_argument("TrianglePattern: bit cube size mismatch");
}

void TrianglePattern::set(int i, int j, int k, bool v) {
  bits_[idx(i, j, k)] = v ? 1 : 0;
  bits_[idx(i, k, j)] = v ? 1 : 0;
}

std::string TrianglePattern::key() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

bool TrianglePattern::operator<(const TrianglePattern& o) const {
  if (m_ != o.m_) return m_ < o.m_;
  return bits_ < o.bits_;
}

namespace {

template <typename V>
TrianglePattern pattern_from_values(const std::vector<V>& s) {
  int m = static_cast<int>(s.size());
  TrianglePattern p(m, std::vector<char>(static_cast<std::size_t>(m) * m * m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = j; k < m; ++k) p.set(i, j, k, s[i] <= s[j] + s[k]);
  return p;
}

}  // namespace

TrianglePattern pattern_of(const DistanceSet& s) { return pattern_from_values(s.values()); }

TrianglePattern pattern_of_ints(const std::vector<long long>& s) { return pattern_from_values(s); }

bool similar(const DistanceSet& s, const DistanceSet& t) {
  if (s.size() != t.size()) return false;
  return pattern_of(s) == pattern_of(t);
}

FourValuesResult check_four_values(const DistanceSet& s) {
  int n = s.size();
  auto admissible = [&](const Rat& v, const Rat& a, const Rat& b) {
    return (a - b).abs() <= v && v <= a + b;
  };
  for (int i0 = 0; i0 < n; ++i0)
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = 0; i2 < n; ++i2)
        for (int i3 = 0; i3 < n; ++i3) {
          const Rat &s0 = s[i0], &s1 = s[i1], &s0p = s[i2], &s1p = s[i3];
          int t_found = -1;
          for (int t = 0; t < n && t_found < 0; ++t)
            if (admissible(s[t], s0, s1) && admissible(s[t], s0p, s1p)) t_found = t;
          if (t_found < 0) continue;
          bool has_u = false;
          for (int u = 0; u < n && !has_u; ++u)
            if (admissible(s[u], s0, s0p) && admissible(s[u], s1, s1p)) has_u = true;
          if (!has_u) return {false, {s0, s1, s0p, s1p}, s[t_found]};
        }
  return {};
}

// ---------------------------------------------------------------------------
// Pattern realizability: exact Fourier-Motzkin on the homogeneous system
//   bit true :  s_i - s_j - s_k           <= 0
//   bit false:  s_j + s_k - s_i + eps     <= 0
//   ordering :  eps - s_0 <= 0,  s_i - s_{i+1} + eps <= 0
// over variables s_0..s_{m-1}, eps; the s variables are eliminated one by one
// and eps last, so feasibility with eps > 0 reduces to a sign check.
// ---------------------------------------------------------------------------
namespace {

using Row = std::vector<BigInt>;  // coefficients, row meaning sum(a_u * x_u) <= 0

void normalize(Row& r) {
  BigInt g = 0;
  for (const BigInt& c : r) g = mp::gcd(g, c);
  if (g > 1)
    for (BigInt& c : r) c /= g;
}

std::vector<Row> eliminate(const std::vector<Row>& rows, int v) {
  std::vector<Row> keep, pos, neg;
  for (const Row& r : rows) {
    if (r[v] == 0)
      keep.push_back(r);
    else if (r[v] > 0)
      pos.push_back(r);
    else
      neg.push_back(r);
  }
  for (const Row& p : pos)
    for (const Row& q : neg) {
      Row r(p.size());
      for (std::size_t u = 0; u < r.size(); ++u) r[u] = p[u] * (-q[v]) + q[u] * p[v];
      normalize(r);
      keep.push_back(std::move(r));
    }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  return keep;
}

struct Feasibility {
  bool feasible = false;
  std::vector<BigInt> witness;  // integer-scaled values, strictly increasing
};

Feasibility solve_pattern(const TrianglePattern& p) {
  int m = p.size();
  int nv = m + 1;  // s_0..s_{m-1}, eps
  std::vector<Row> rows;
  auto add = [&](std::initializer_list<std::pair<int, int>> terms) {
    Row r(nv, 0);
    for (auto [var, c] : terms) r[var] += c;
    rows.push_back(std::move(r));
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = j; k < m; ++k) {
        if (p.get(i, j, k))
          add({{i, 1}, {j, -1}, {k, -1}});
        else
          add({{j, 1}, {k, 1}, {i, -1}, {m, 1}});
      }
  add({{m, 1}, {0, -1}});
  for (int i = 0; i + 1 < m; ++i) add({{i, 1}, {i + 1, -1}, {m, 1}});

  // Eliminate s_{m-1} down to s_0, snapshotting for back-substitution.
  std::vector<std::vector<Row>> snap(m);
  std::vector<Row> cur = rows;
  for (int v = m - 1; v >= 0; --v) {
    snap[v] = cur;
    cur = eliminate(cur, v);
  }
  for (const Row& r : cur)
    if (r[m] > 0) return {};  // needs eps <= 0

  // Back-substitute with eps = 1, assigning s_0, s_1, ... from the snapshots.
  std::vector<BigRat> val(nv, 0);
  val[m] = 1;
  for (int v = 0; v < m; ++v) {
    bool has_lo = false, has_hi = false;
    BigRat lo = 0, hi = 0;
    for (const Row& r : snap[v]) {
      if (r[v] == 0) continue;
      // snap[v] rows involve vars 0..v and eps; everything but v is assigned.
      BigRat rhs = 0;
      for (int u = 0; u <= m; ++u)
        if (u != v) rhs -= BigRat(r[u]) * val[u];
      BigRat bound = rhs / BigRat(r[v]);
      if (r[v] > 0) {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      } else {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      }
    }
    if (has_lo && has_hi)
      val[v] = (lo + hi) / 2;
    else if (has_lo)
      val[v] = lo + 1;
    else if (has_hi)
      val[v] = hi - 1;
    else
      val[v] = 1;
  }

  BigInt lcm = 1;
  for (int v = 0; v < m; ++v) lcm = mp::lcm(lcm, mp::denominator(val[v]));
  Feasibility out;
  out.feasible = true;
  for (int v = 0; v < m; ++v)
    out.witness.push_back(mp::numerator(val[v]) * (lcm / mp::denominator(val[v])));
  return out;
}

// Lexicographically least increasing tuple with fixed maximum realizing p.
bool canonical_rec(const TrianglePattern& p, int m, long long max_val, std::vector<long long>& s) {
  int pos = static_cast<int>(s.size());
  // Only triples with i > max(j,k) are informative; the rest are forced true
  // for increasing positive values (and for any FM-feasible pattern).
  auto consistent_at = [&](int i) {
    for (int k = 0; k < i; ++k)
      for (int j = 0; j <= k; ++j)
        if (p.get(i, j, k) != (s[i] <= s[j] + s[k])) return false;
    return true;
  };
  if (pos == m - 1) {
    s.push_back(max_val);
    bool ok = consistent_at(m - 1);
    if (!ok) s.pop_back();
    return ok;
  }
  long long lo = pos == 0 ? 1 : s.back() + 1;
  for (long long v = lo; v <= max_val - (m - 1 - pos); ++v) {
    s.push_back(v);
    if (consistent_at(pos) && canonical_rec(p, m, max_val, s)) return true;
    s.pop_back();
  }
  return false;
}

}  // namespace

Realization realize_pattern(const TrianglePattern& p) {
  int m = p.size();
  if (m == 0) return {true, {}};
  Feasibility f = solve_pattern(p);
  if (!f.feasible) return {};

  BigInt wmax = f.witness.back();
  long long search_cap = 500;
  if (wmax < search_cap) search_cap = wmax.convert_to<long long>();
  for (long long mx = m; mx <= search_cap; ++mx) {
    std::vector<long long> s;
    if (canonical_rec(p, m, mx, s)) return {true, s};
  }
  // The FM witness guarantees a realization exists; reps at desk-scale sizes
  // are far below the search cap, so this is unreachable in practice.
  std::vector<long long> s;
  for (const BigInt& w : f.witness) s.push_back(w.convert_to<long long>());
  return {true, s};
}

namespace {

void enumerate_patterns_rec(int m, int i, int pair_idx, const std::vector<std::pair<int, int>>& prs,
                            TrianglePattern& p, std::vector<TrianglePattern>& out) {
  if (i == m) {
    out.push_back(p);
    return;
  }
  if (pair_idx == static_cast<int>(prs.size())) {
    // Collect pairs (j <= k < i+1) for the next level.
    std::vector<std::pair<int, int>> next;
    for (int k = 0; k <= i; ++k)
      for (int j = 0; j <= k; ++j) next.emplace_back(j, k);
    enumerate_patterns_rec(m, i + 1, 0, next, p, out);
    return;
  }
  auto [j, k] = prs[pair_idx];
  // True is forced when a componentwise-smaller pair is already true
  // (s_j + s_k only grows), false is forced when the same pair at the
  // previous level is false (s_i only grows).
  bool must_true = false;
  for (int k2 = 0; k2 <= k && !must_true; ++k2)
    for (int j2 = 0; j2 <= std::min(j, k2) && !must_true; ++j2)
      if (!(j2 == j && k2 == k) && p.get(i, j2, k2)) must_true = true;
  bool may_true = (k >= i - 1) || p.get(i - 1, j, k);
  if (may_true) {
    p.set(i, j, k, true);
    enumerate_patterns_rec(m, i, pair_idx + 1, prs, p, out);
  }
  if (!must_true) {
    p.set(i, j, k, false);
    enumerate_patterns_rec(m, i, pair_idx + 1, prs, p, out);
    p.set(i, j, k, true);  // restore for siblings
  }
}

}  // namespace

ClassificationReport classify(int m) {
  if (m < 1) throw std::invalid_argument("classify: m must be >= 1");
  // Start from the all-true cube; forced bits (i <= max(j,k)) stay true.
  TrianglePattern seed(m, std::vector<char>(static_cast<std::size_t>(m) * m * m, 1));
  std::vector<TrianglePattern> candidates;
  std::vector<std::pair<int, int>> first_pairs = {{0, 0}};
  if (m == 1)
    candidates.push_back(seed);
  else
    enumerate_patterns_rec(m, 1, 0, first_pairs, seed, candidates);

  ClassificationReport report;
  report.m = m;
  // Candidates are independent; realizability checks run in parallel and the
  // results merge in candidate order before the final sort.
  std::vector<Realization> realized(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) { realized[i] = realize_pattern(candidates[i]); });
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!realized[i].feasible) continue;
    std::vector<Rat> vals;
    for (long long v : realized[i].representative) vals.emplace_back(v);
    bool fv = check_four_values(DistanceSet(vals)).ok;
    report.classes.push_back({candidates[i], realized[i].representative, fv});
    if (fv) ++report.four_values_count;
  }
  std::sort(report.classes.begin(), report.classes.end(),
            [](const ClassInfo& a, const ClassInfo& b) {
              if (a.representative.back() != b.representative.back())
                return a.representative.back() < b.representative.back();
              return a.representative < b.representative;
            });
  return report;
}

}  // namespace uhs
