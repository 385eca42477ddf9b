#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uhs/metric.hpp"

namespace uhs {

/// The edge-labelled graph Z = X_m u T: the points of the rounded space X_m
/// plus the tree T of index sets coherent with the X_m enumeration, with the
/// partial labelling delta on point pairs, comparable tree nodes, and
/// node-to-projection edges.
class HedgehogGraph {
 public:
  HedgehogGraph(FiniteMetricSpace fine, FiniteMetricSpace coarse, int m,
                std::vector<std::vector<int>> nodes);

  int m() const { return m_; }
  int point_count() const { return fine_.size(); }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int vertex_count() const { return point_count() + node_count(); }
  bool is_point(int v) const { return v < point_count(); }
  const std::vector<int>& node_set(int v) const { return nodes_[v - point_count()]; }
  const FiniteMetricSpace& fine() const { return fine_; }
  const FiniteMetricSpace& coarse() const { return coarse_; }

  /// Projection: a point maps to itself, a node to the point of its max index.
  int projection(int v) const;
  /// End-extension comparability of two nodes.
  bool comparable(int u, int v) const;

  bool has_edge(int u, int v) const;
  const Rat& label(int u, int v) const;  // defined only on edges

  std::vector<std::pair<int, int>> edges() const;  // u < v, deterministic order
  std::string vertex_name(int v) const;

 private:
  FiniteMetricSpace fine_, coarse_;
  int m_;
  std::vector<std::vector<int>> nodes_;
  std::vector<std::optional<Rat>> delta_;  // dense vertex_count^2
  std::size_t at(int u, int v) const {
    return static_cast<std::size_t>(u) * vertex_count() + v;
  }
  void add_edge(int u, int v, const Rat& value);
};

/// Builds Z from a fine rational metric and its grid rounding (checked to be
/// ceil-related). T holds every index set of size <= max_tree_size whose
/// position-to-element map is a coarse-space isometry.
HedgehogGraph build_z(const FiniteMetricSpace& fine, const FiniteMetricSpace& coarse, int m,
                      int max_tree_size);

/// All-pairs capped path metric d^Z (exact shortest paths, then min with 1).
/// Throws if the graph is disconnected.
std::vector<std::vector<Rat>> path_metric(const HedgehogGraph& g);

/// Pairs in dom(delta) where d^Z differs from delta; empty is the Lemma that
/// the path metric extends the labelling.
struct DeltaMismatch {
  int u, v;
  Rat delta_value, dz_value;
};
std::vector<DeltaMismatch> delta_mismatches(const HedgehogGraph& g,
                                            const std::vector<std::vector<Rat>>& dz);

enum class CycleKind {
  PointTriangle,   // inside X_m
  TreeTriangle,    // inside T, must lie in a branch
  MixedCase1,      // two points, two comparable projecting nodes
  MixedCase2,      // one point, two incomparable nodes over a common lower node
  MixedCase3,      // two points, two projecting nodes over a common lower node
  Unmatched,       // any other shape: a violation
};

struct CycleInfo {
  std::vector<int> vertices;  // cyclic order, canonical rotation
  CycleKind kind = CycleKind::Unmatched;
  bool metric_ok = false;  // every edge <= min(1, sum of the others)
  bool shape_ok = false;   // structural match + the case inequalities
  std::string note;
};

struct CycleCensus {
  std::vector<CycleInfo> cycles;
  int violation_count = 0;
};

/// Enumerates irreducible (chordless) cycles up to max_len and checks them
/// against the cycle lemmas; any unmatched shape, non-metric cycle, or failed
/// case inequality counts as a violation.
CycleCensus classify_cycles(const HedgehogGraph& g, int max_len = 6);

/// Maximal chains of T, each listed root-to-leaf as vertex ids.
std::vector<std::vector<int>> maximal_branches(const HedgehogGraph& g);

struct BranchReport {
  std::vector<int> chain;
  bool isometric = true;        // d^Z on the branch equals the fine prefix metric
  bool projections_ok = true;   // every node at exactly 1/m from its projection
  std::string note;
};
BranchReport branch_cover_check(const HedgehogGraph& g, const std::vector<int>& chain,
                                const std::vector<std::vector<Rat>>& dz);

}  // namespace uhs
