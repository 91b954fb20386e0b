#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treeweave/graph.hpp"

namespace treeweave {

// Edge-disjoint-paths instance: an unweighted undirected graph H plus k
// commodity pairs. Repeated pairs are distinct commodities.
struct EdpInstance {
  DemandGraph h;  // edge weights are ignored; each edge counts once
  std::vector<std::pair<int, int>> pairs;
};

// One vertex of the exploded graph F: which H-vertex's clique it belongs
// to and what it carries (at most one H-edge and at most one demand).
struct PortAssignment {
  int f_vertex = 0;
  int h_vertex = 0;
  std::optional<int> edge_index;    // index into H's canonical edge order
  std::optional<int> demand_index;  // index into pairs
};

// General congestion-tree instance: find a spanning tree of the
// feasibility graph whose per-edge demand load is at most bound.
struct CongestionInstance {
  DemandGraph feasibility;               // F
  DemandGraph demands;                   // G_d, on F's vertex set
  std::uint64_t bound = 1;               // D
  std::vector<PortAssignment> port_map;  // one entry per F vertex
};

// Vertex explosion: every H-vertex u becomes a clique on deg(u) ports;
// each H-edge occupies one fresh port at both ends (in H's canonical
// edge order), and the i-th demand occupies one fresh demand-port of
// each terminal's clique. D = 1. A terminal of degree 0, or one named by
// more demands than its degree, is an input error.
CongestionInstance reduce_edp(const EdpInstance& inst);

// True iff tree_edges is a spanning tree of inst.feasibility and every
// tree edge's induced-cut load against inst.demands is at most
// inst.bound. Edges not present in F are an input error.
bool verify_congestion_tree(const CongestionInstance& inst,
                            const std::vector<std::pair<int, int>>& tree_edges);

}  // namespace treeweave
