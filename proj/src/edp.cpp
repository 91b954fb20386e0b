#include "treeweave/edp.hpp"

#include <algorithm>
#include <string>

#include "treeweave/errors.hpp"
#include "treeweave/gomory_hu.hpp"

namespace treeweave {

CongestionInstance reduce_edp(const EdpInstance& inst) {
  const DemandGraph& h = inst.h;
  int hn = h.vertex_count();
  std::vector<int> degree(hn, 0);
  for (const auto& e : h.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> demand_count(hn, 0);
  for (const auto& [s, t] : inst.pairs) {
    if (s < 0 || s >= hn || t < 0 || t >= hn) {
      throw InputError("edp reduction: demand endpoint out of range");
    }
    ++demand_count[s];
    ++demand_count[t];
  }
  for (int v = 0; v < hn; ++v) {
    if (demand_count[v] > 0 && degree[v] == 0) {
      throw InputError("edp reduction: terminal " + std::to_string(v) + " has degree 0");
    }
    if (demand_count[v] > degree[v]) {
      throw InputError("edp reduction: terminal " + std::to_string(v) + " appears in " +
                       std::to_string(demand_count[v]) + " demands but has degree " +
                       std::to_string(degree[v]));
    }
  }

  // One clique port per unit of degree; |V(F)| = sum of degrees.
  CongestionInstance out;
  std::vector<int> first_port(hn, 0);
  int fn = 0;
  for (int v = 0; v < hn; ++v) {
    first_port[v] = fn;
    fn += degree[v];
  }
  out.port_map.resize(fn);
  for (int v = 0; v < hn; ++v) {
    for (int k = 0; k < degree[v]; ++k) {
      out.port_map[first_port[v] + k].f_vertex = first_port[v] + k;
      out.port_map[first_port[v] + k].h_vertex = v;
    }
  }

  std::vector<WeightedEdge> f_edges;
  for (int v = 0; v < hn; ++v) {
    for (int a = 0; a < degree[v]; ++a) {
      for (int b = a + 1; b < degree[v]; ++b) {
        f_edges.push_back({first_port[v] + a, first_port[v] + b, 1});
      }
    }
  }
  // Each H-edge gets a dedicated, previously unused port at both ends,
  // consumed in H's canonical edge order.
  std::vector<int> edge_cursor(hn, 0);
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const auto& e = h.edges()[i];
    int pu = first_port[e.u] + edge_cursor[e.u]++;
    int pv = first_port[e.v] + edge_cursor[e.v]++;
    f_edges.push_back({pu, pv, 1});
    out.port_map[pu].edge_index = static_cast<int>(i);
    out.port_map[pv].edge_index = static_cast<int>(i);
  }
  // Demands get their own fresh ports, independent of the edge cursors;
  // a port may carry one H-edge and one demand but never two of either.
  std::vector<int> demand_cursor(hn, 0);
  std::vector<WeightedEdge> d_edges;
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    auto [s, t] = inst.pairs[i];
    int ps = first_port[s] + demand_cursor[s]++;
    int pt = first_port[t] + demand_cursor[t]++;
    d_edges.push_back({ps, pt, 1});
    out.port_map[ps].demand_index = static_cast<int>(i);
    out.port_map[pt].demand_index = static_cast<int>(i);
  }

  out.feasibility = DemandGraph(fn, std::move(f_edges));
  out.demands = DemandGraph(fn, std::move(d_edges));
  out.bound = 1;
  return out;
}

bool verify_congestion_tree(const CongestionInstance& inst,
                            const std::vector<std::pair<int, int>>& tree_edges) {
  const DemandGraph& f = inst.feasibility;
  int n = f.vertex_count();
  for (auto [a, b] : tree_edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw InputError("verify tree: edge endpoint out of range");
    }
    if (f.weight_between(a, b) == 0) {
      throw InputError("verify tree: edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} is not in the feasibility graph");
    }
  }
  if (static_cast<int>(tree_edges.size()) != n - 1) return false;

  // Spanning and acyclic: n-1 edges plus full connectivity.
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int x : adj[v]) {
      if (!seen[x]) {
        seen[x] = 1;
        stack.push_back(x);
      }
    }
  }
  if (visited != n) return false;

  for (std::uint64_t load : spanning_edge_loads(inst.demands, tree_edges)) {
    if (load > inst.bound) return false;
  }
  return true;
}

}  // namespace treeweave
