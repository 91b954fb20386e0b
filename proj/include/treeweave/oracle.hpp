#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treeweave/graph.hpp"
#include "treeweave/rational.hpp"
#include "treeweave/routing_tree.hpp"

namespace treeweave {

// Enumeration caps keep every brute-force sweep under seconds: routing
// topologies grow as (2n-5)!! and labeled spanning trees as n^(n-2).
inline constexpr int kTopologyEnumCap = 10;
inline constexpr int kSpanningEnumCap = 7;
inline constexpr int kSubsetEnumCap = 10;

// (2n-5)!! for n >= 3; 1 for n in {1,2,3}.
std::uint64_t routing_tree_topology_count(int n);

// n^(n-2) labeled trees on n vertices.
std::uint64_t spanning_tree_count(int n);

// Lazily yields every unrooted leaf-labeled tree with all internal
// degrees 3, exactly once, by stepwise leaf insertion: leaf k is attached
// by subdividing each edge of each (k-1)-leaf tree in turn.
class TopologyIterator {
 public:
  TopologyIterator(std::vector<int> leaf_labels, int cap = kTopologyEnumCap);
  std::optional<RoutingTree> next();

 private:
  RoutingTree decode() const;
  bool advance();
  std::vector<int> labels_;
  std::vector<int> digits_;  // digit i in [0, 2i+3): insertion edge for leaf 3+i
  bool done_ = false;
  bool first_ = true;
};

TopologyIterator enum_routing_trees(std::vector<int> leaf_labels, int cap = kTopologyEnumCap);

struct OptCongestion {
  RoutingTree tree;  // first optimum in enumeration order
  std::uint64_t congestion = 0;
};

// Minimum congestion over all routing-tree topologies of g.
OptCongestion brute_opt_congestion(const DemandGraph& g, int cap = kTopologyEnumCap);

// Lazily yields all n^(n-2) labeled spanning trees of the complete graph
// on n vertices via Prufer-sequence decoding.
class SpanningTreeIterator {
 public:
  SpanningTreeIterator(int n, int cap = kSpanningEnumCap);
  std::optional<std::vector<std::pair<int, int>>> next();

 private:
  int n_;
  std::vector<int> seq_;
  bool done_ = false;
  bool first_ = true;
};

SpanningTreeIterator enum_spanning_trees(int n, int cap = kSpanningEnumCap);

struct OptSpanning {
  std::vector<std::pair<int, int>> tree;
  std::uint64_t congestion = 0;
};

// Minimum over all labeled spanning trees of the maximum induced-cut
// load; the referee for the complete-feasibility-graph optimum.
OptSpanning brute_opt_spanning_congestion(const DemandGraph& g, int cap = kSpanningEnumCap);

// Yields every b-balanced proper subset (canonical side only) of g's
// vertices; the naive referee for exact_min_balanced_cut.
class BalancedCutIterator {
 public:
  BalancedCutIterator(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                      int cap = kSubsetEnumCap);
  std::optional<Cut> next();

 private:
  int n_;
  const VertexWeights& u_;
  Rational b_;
  std::uint64_t mask_ = 0;
};

BalancedCutIterator enum_balanced_cuts(const DemandGraph& g, const VertexWeights& u,
                                       const Rational& b, int cap = kSubsetEnumCap);

}  // namespace treeweave
