#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treeweave/graph.hpp"
#include "treeweave/rational.hpp"
#include "treeweave/separator.hpp"

namespace treeweave {

// Leaf-labeled tree whose leaves biject with a demand graph's vertices.
// After finalization every internal node has degree 3 (single edge for
// n = 2, single node for n = 1) and the root marker is cleared; the root
// is only meaningful while a tree is under construction.
class RoutingTree {
 public:
  static constexpr int kInternal = -1;

  int add_leaf(int graph_vertex);
  int add_internal();
  void add_edge(int a, int b);  // stored as (min, max)

  int node_count() const { return static_cast<int>(node_vertex_.size()); }
  bool is_leaf(int node) const { return node_vertex_[node] != kInternal; }
  int leaf_vertex(int node) const { return node_vertex_[node]; }
  int leaf_count() const;
  int internal_count() const { return node_count() - leaf_count(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int node) const;
  std::vector<std::vector<int>> adjacency() const;

  // leaf node id per graph vertex, or -1 when that vertex has no leaf.
  std::vector<int> leaf_node_by_vertex(int n_vertices) const;

  void set_root(int node) { root_ = node; }
  void clear_root() { root_.reset(); }
  std::optional<int> root() const { return root_; }

  // Sorts the edge list; node ids are already canonical by construction
  // order, so equal trees compare equal after this.
  void sort_edges();

  bool operator==(const RoutingTree& o) const {
    return node_vertex_ == o.node_vertex_ && edges_ == o.edges_ && root_ == o.root_;
  }

 private:
  std::vector<int> node_vertex_;  // kInternal for internal nodes
  std::vector<std::pair<int, int>> edges_;
  std::optional<int> root_;
};

// Recursive bisection: each piece S gets per-vertex weights equal to its
// demand toward the rest of the graph, a vertex holding more than half of
// that weight is split off alone, and otherwise the piece is divided by a
// b-balanced cut of its induced subgraph. The top call (and any piece
// with no outward demand) falls back to unit weights. The assembled tree
// is finalized by short-cutting all degree-2 nodes.
//
// naive_unit_weights replaces the outside-demand weighting with unit
// weights at every level; it exists only as a benchmark baseline.
RoutingTree route_tree(const DemandGraph& g, const SeparatorStrategy& strategy,
                       const Rational& b = Rational(1, 4), bool naive_unit_weights = false);

// Splices out every internal node of degree two (leaves are never
// removed), compacts node ids, and clears the root marker. The result
// does not depend on splice order.
RoutingTree shortcut_degree_two(const RoutingTree& t);

// Load of tree edge e: remove e, collect the graph vertices whose leaves
// lie in one component, and return that set's cut weight. Symmetric in
// the choice of component.
std::uint64_t edge_load(const RoutingTree& t, const DemandGraph& g, std::pair<int, int> e);

struct CongestionReport {
  std::vector<std::pair<std::pair<int, int>, std::uint64_t>> per_edge;
  std::uint64_t congestion = 0;
  std::uint64_t lb_vertex = 0;
  std::optional<std::uint64_t> lb_separator;
  std::optional<Rational> ratio_upper_cert;  // congestion / best lower bound
};

// Evaluates every edge load by the cut method and cross-checks against
// routing each demand along its tree path; a mismatch throws
// InvariantError. lb_separator is the exact minimum 1/3-balanced cut
// under unit vertex weights, computed when requested and n is within the
// exact-separator limit.
CongestionReport congestion_report(const RoutingTree& t, const DemandGraph& g,
                                   bool with_separator_lb);

struct LowerBounds {
  std::uint64_t lb_vertex = 0;
  std::optional<std::uint64_t> lb_separator;
};

// max_v W(v), plus (for 2 <= n <= exact limit) the exact minimum
// 1/3-balanced cut weight under unit vertex weights. Only the exact
// separator certifies; a heuristic cut is an upper bound on the
// separator optimum and proves nothing.
LowerBounds lower_bounds(const DemandGraph& g);

// Finalized-form invariants: connected, acyclic, leaves biject with
// 0..n-1, internal degrees all 3, internal count n-2 for n >= 3.
bool is_valid_routing_tree(const RoutingTree& t, int n_vertices);

// Node sequence of the unique tree path between two nodes.
std::vector<int> tree_path(const RoutingTree& t, int from_node, int to_node);

}  // namespace treeweave
