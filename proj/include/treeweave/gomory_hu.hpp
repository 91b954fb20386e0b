#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treeweave/graph.hpp"

namespace treeweave {

struct MinCutResult {
  std::uint64_t value = 0;
  Cut side;  // s-side of the residual network, s in, t out
};

// Maximum flow = minimum cut between s and t, by shortest augmenting
// paths over the undirected residual network. Integer capacities, so
// termination and exactness are unconditional.
MinCutResult min_cut_st(const DemandGraph& g, int s, int t);

// Spanning tree on g's vertex ids whose edge labels are pairwise min-cut
// values: for every pair (s,t) the minimum label on the tree path equals
// the s-t min cut in g.
struct GomoryHuTree {
  int n = 0;
  std::vector<int> parent;          // parent[0] is a self-loop sentinel
  std::vector<std::uint64_t> flow;  // flow[i] labels edge {i, parent[i]}, i >= 1

  std::vector<std::pair<int, int>> edge_list() const;
  std::uint64_t path_min_flow(int s, int t) const;
};

// Gusfield's scheme: n-1 max-flow calls on the original graph, no
// contractions.
GomoryHuTree gomory_hu(const DemandGraph& g);

struct CompleteTreeResult {
  GomoryHuTree tree;
  std::uint64_t congestion = 0;
};

// The Gomory-Hu tree read as the routing network itself (graph vertices
// are tree nodes, demands follow tree paths). Each edge's induced-cut
// load is checked against its flow label and the maximum is returned;
// this is the optimal congestion over all spanning trees of the complete
// graph on V.
CompleteTreeResult optimal_complete_tree(const DemandGraph& g);

// Induced-cut load of every edge of a labeled tree over g's vertices,
// in the order given. The edges must form a spanning tree of g's vertex
// set.
std::vector<std::uint64_t> spanning_edge_loads(const DemandGraph& g,
                                               const std::vector<std::pair<int, int>>& tree_edges);

}  // namespace treeweave
