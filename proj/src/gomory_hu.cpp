#include "treeweave/gomory_hu.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "treeweave/errors.hpp"

namespace treeweave {

namespace {

// Arc-pair residual network for undirected edges: arcs 2k and 2k+1 are
// mutual reverses, both starting at capacity w.
struct FlowNetwork {
  int n;
  std::vector<int> to;
  std::vector<std::uint64_t> cap;
  std::vector<std::vector<int>> out;  // arc indices per vertex

  explicit FlowNetwork(const DemandGraph& g) : n(g.vertex_count()), out(n) {
    for (const auto& e : g.edges()) {
      out[e.u].push_back(static_cast<int>(to.size()));
      to.push_back(e.v);
      cap.push_back(e.w);
      out[e.v].push_back(static_cast<int>(to.size()));
      to.push_back(e.u);
      cap.push_back(e.w);
    }
  }

  // BFS parent arcs from s; returns true when t was reached.
  bool bfs(int s, int t, std::vector<int>& parent_arc) const {
    parent_arc.assign(n, -1);
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (v == t) return true;
      for (int a : out[v]) {
        int x = to[a];
        if (!seen[x] && cap[a] > 0) {
          seen[x] = 1;
          parent_arc[x] = a;
          queue.push_back(x);
        }
      }
    }
    return false;
  }
};

}  // namespace

MinCutResult min_cut_st(const DemandGraph& g, int s, int t) {
  int n = g.vertex_count();
  if (s < 0 || s >= n || t < 0 || t >= n) throw InputError("min cut: vertex id out of range");
  if (s == t) throw InputError("min cut: s and t must differ");

  FlowNetwork net(g);
  std::vector<int> parent_arc;
  std::vector<int> arc_from(net.to.size());
  for (int v = 0; v < n; ++v) {
    for (int a : net.out[v]) arc_from[a] = v;
  }

  std::uint64_t flow = 0;
  while (net.bfs(s, t, parent_arc)) {
    std::uint64_t bottleneck = std::numeric_limits<std::uint64_t>::max();
    for (int v = t; v != s; v = arc_from[parent_arc[v]]) {
      bottleneck = std::min(bottleneck, net.cap[parent_arc[v]]);
    }
    for (int v = t; v != s; v = arc_from[parent_arc[v]]) {
      int a = parent_arc[v];
      net.cap[a] -= bottleneck;
      net.cap[a ^ 1] += bottleneck;
    }
    flow += bottleneck;
  }

  // s-side of the final residual network.
  VertexSet side(n);
  std::deque<int> queue{s};
  side.insert(s);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int a : net.out[v]) {
      int x = net.to[a];
      if (net.cap[a] > 0 && !side.contains(x)) {
        side.insert(x);
        queue.push_back(x);
      }
    }
  }
  return {flow, std::move(side)};
}

std::vector<std::pair<int, int>> GomoryHuTree::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, parent[i]);
  return edges;
}

std::uint64_t GomoryHuTree::path_min_flow(int s, int t) const {
  if (s < 0 || s >= n || t < 0 || t >= n || s == t) {
    throw InputError("gomory-hu path query: bad vertex pair");
  }
  // BFS over the tree; parent pointers alone are not ancestor-ordered.
  std::vector<std::vector<std::pair<int, std::uint64_t>>> adj(n);
  for (int i = 1; i < n; ++i) {
    adj[i].emplace_back(parent[i], flow[i]);
    adj[parent[i]].emplace_back(i, flow[i]);
  }
  std::vector<int> from(n, -1);
  std::vector<std::uint64_t> best(n, 0);
  std::deque<int> queue{s};
  from[s] = s;
  best[s] = std::numeric_limits<std::uint64_t>::max();
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& [x, f] : adj[v]) {
      if (from[x] == -1) {
        from[x] = v;
        best[x] = std::min(best[v], f);
        queue.push_back(x);
      }
    }
  }
  if (from[t] == -1) throw InvariantError("gomory-hu tree is not connected");
  return best[t];
}

GomoryHuTree gomory_hu(const DemandGraph& g) {
  int n = g.vertex_count();
  if (n < 1) throw InputError("gomory-hu: graph has no vertices");
  GomoryHuTree t;
  t.n = n;
  t.parent.assign(n, 0);
  t.flow.assign(n, 0);

  for (int i = 1; i < n; ++i) {
    int p = t.parent[i];
    auto [f, side] = min_cut_st(g, i, p);
    t.flow[i] = f;
    for (int j = i + 1; j < n; ++j) {
      if (t.parent[j] == p && side.contains(j)) t.parent[j] = i;
    }
    // Swap rule: when i separates its grandparent from its parent, i
    // takes the parent's place in the tree.
    int gp = t.parent[p];
    if (side.contains(gp)) {
      t.parent[i] = gp;
      t.parent[p] = i;
      t.flow[i] = t.flow[p];
      t.flow[p] = f;
    }
  }
  return t;
}

std::vector<std::uint64_t> spanning_edge_loads(const DemandGraph& g,
                                               const std::vector<std::pair<int, int>>& tree_edges) {
  int n = g.vertex_count();
  if (static_cast<int>(tree_edges.size()) != n - 1) {
    throw InputError("spanning loads: a spanning tree needs exactly n-1 edges");
  }
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
  for (std::size_t j = 0; j < tree_edges.size(); ++j) {
    auto [a, b] = tree_edges[j];
    if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
      throw InputError("spanning loads: bad tree edge");
    }
    adj[a].emplace_back(b, static_cast<int>(j));
    adj[b].emplace_back(a, static_cast<int>(j));
  }
  std::vector<std::uint64_t> loads(tree_edges.size(), 0);
  for (std::size_t skip = 0; skip < tree_edges.size(); ++skip) {
    VertexSet side(n);
    std::vector<int> stack{tree_edges[skip].first};
    side.insert(tree_edges[skip].first);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& [x, j] : adj[v]) {
        if (j == static_cast<int>(skip) || side.contains(x)) continue;
        side.insert(x);
        stack.push_back(x);
      }
    }
    loads[skip] = cut_weight(g, side);
  }
  return loads;
}

CompleteTreeResult optimal_complete_tree(const DemandGraph& g) {
  if (g.vertex_count() < 2) throw InputError("optimal complete tree: need at least 2 vertices");
  CompleteTreeResult result;
  result.tree = gomory_hu(g);
  auto edges = result.tree.edge_list();
  auto loads = spanning_edge_loads(g, edges);
  for (int i = 1; i < result.tree.n; ++i) {
    if (loads[i - 1] != result.tree.flow[i]) {
      throw InvariantError("gomory-hu edge load does not equal its flow label");
    }
    result.congestion = std::max(result.congestion, loads[i - 1]);
  }
  return result;
}

}  // namespace treeweave
