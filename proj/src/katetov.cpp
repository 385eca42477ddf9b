#include "uhs/katetov.hpp"

#include <algorithm>
#include <stdexcept>

#include "uhs/discretize.hpp"

namespace uhs {

bool is_katetov(const FiniteMetricSpace& x, const std::vector<Rat>& f) {
  if (f.size() != static_cast<std::size_t>(x.size()))
    throw std::invalid_argument("is_katetov: value count != point count");
  for (const Rat& v : f)
    if (!(v > Rat(0))) return false;
  for (int i = 0; i < x.size(); ++i)
    for (int j = i + 1; j < x.size(); ++j) {
      Rat diff = (f[i] - f[j]).abs();
      if (diff > x.d(i, j)) return false;
      if (x.d(i, j) > f[i] + f[j]) return false;
    }
  return true;
}

FiniteMetricSpace extend_with(const FiniteMetricSpace& x, const std::vector<Rat>& f) {
  if (!is_katetov(x, f)) throw std::invalid_argument("extend_with: map is not Katetov");
  int n = x.size();
  FiniteMetricSpace out(n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) out.set_d(i, j, x.d(i, j));
    out.set_d(i, n, f[i]);
  }
  return out;
}

namespace {

// Backtracking over value positions; partial two-sided checks prune early and
// the ascending value order yields lexicographic output.
void enum_rec(const FiniteMetricSpace& x, const std::vector<Rat>& values, std::vector<Rat>& cur,
              std::vector<std::vector<Rat>>& out) {
  int i = static_cast<int>(cur.size());
  if (i == x.size()) {
    out.push_back(cur);
    return;
  }
  for (const Rat& v : values) {
    bool ok = true;
    for (int j = 0; j < i && ok; ++j) {
      if ((cur[j] - v).abs() > x.d(j, i)) ok = false;
      if (ok && x.d(j, i) > cur[j] + v) ok = false;
    }
    if (!ok) continue;
    cur.push_back(v);
    enum_rec(x, values, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Rat>> enumerate_katetov(const FiniteMetricSpace& x,
                                                std::vector<Rat> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::erase_if(values, [](const Rat& v) { return !(v > Rat(0)); });
  std::vector<std::vector<Rat>> out;
  std::vector<Rat> cur;
  enum_rec(x, values, cur, out);
  return out;
}

ClaimMap claim_map(const FiniteMetricSpace& base, const std::vector<Rat>& dist_to_y, int m) {
  int n = base.size();
  if (n == 0) throw std::invalid_argument("claim_map: empty base");
  if (dist_to_y.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("claim_map: distance count != point count");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(grid_ceil(base.d(i, j), m).value() == base.d(i, j)))
        throw std::invalid_argument("claim_map: base distances not on the [0,1]_m grid");
  for (const Rat& v : dist_to_y)
    if (!(v > Rat(0))) throw std::invalid_argument("claim_map: y coincides with a base point");

  ClaimMap out;
  out.on_base.reserve(n);
  out.at_new = Rat(0);
  for (int i = 0; i < n; ++i) {
    Rat c = grid_ceil(dist_to_y[i], m).value();
    out.on_base.push_back(c);
    out.at_new = max(out.at_new, c - dist_to_y[i]);
  }
  if (!out.grid_aligned()) {
    // The two-sided inequality over base u {y} is the content of the claim;
    // check it rather than trust it.
    FiniteMetricSpace ext = extend_with(base, dist_to_y);
    std::vector<Rat> f = out.on_base;
    f.push_back(out.at_new);
    if (!is_katetov(ext, f)) throw std::logic_error("claim_map: claimed map failed Katetov check");
  }
  return out;
}

}  // namespace uhs
