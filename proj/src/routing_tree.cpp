#include "treeweave/routing_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "treeweave/errors.hpp"

namespace treeweave {

int RoutingTree::add_leaf(int graph_vertex) {
  node_vertex_.push_back(graph_vertex);
  return node_count() - 1;
}

int RoutingTree::add_internal() {
  node_vertex_.push_back(kInternal);
  return node_count() - 1;
}

void RoutingTree::add_edge(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= node_count() || b >= node_count()) {
    throw InputError("routing tree: bad edge endpoints");
  }
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

int RoutingTree::leaf_count() const {
  int c = 0;
  for (int v : node_vertex_) c += v != kInternal;
  return c;
}

int RoutingTree::degree(int node) const {
  int d = 0;
  for (const auto& [a, b] : edges_) d += (a == node) + (b == node);
  return d;
}

std::vector<std::vector<int>> RoutingTree::adjacency() const {
  std::vector<std::vector<int>> adj(node_count());
  for (const auto& [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::vector<int> RoutingTree::leaf_node_by_vertex(int n_vertices) const {
  std::vector<int> leaf(n_vertices, -1);
  for (int node = 0; node < node_count(); ++node) {
    int v = node_vertex_[node];
    if (v == kInternal) continue;
    if (v < 0 || v >= n_vertices) throw InputError("routing tree: leaf vertex out of range");
    if (leaf[v] != -1) throw InputError("routing tree: duplicate leaf for vertex");
    leaf[v] = node;
  }
  return leaf;
}

void RoutingTree::sort_edges() { std::sort(edges_.begin(), edges_.end()); }

RoutingTree shortcut_degree_two(const RoutingTree& t) {
  int n = t.node_count();
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : t.edges()) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> removed(n, 0);
  // Splicing a node leaves its neighbors' degrees unchanged, so one
  // ascending sweep repeated to fixpoint removes exactly the internal
  // degree-2 nodes regardless of order.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v) {
      if (removed[v] || t.is_leaf(v)) continue;
      std::vector<int> live;
      for (int x : adj[v]) {
        if (!removed[x]) live.push_back(x);
      }
      if (live.size() != 2) continue;
      int p = live[0], q = live[1];
      removed[v] = 1;
      auto drop = [&](int from, int gone) {
        auto& list = adj[from];
        list.erase(std::remove(list.begin(), list.end(), gone), list.end());
      };
      drop(p, v);
      drop(q, v);
      adj[p].push_back(q);
      adj[q].push_back(p);
      changed = true;
    }
  }

  RoutingTree out;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    new_id[v] = t.is_leaf(v) ? out.add_leaf(t.leaf_vertex(v)) : out.add_internal();
  }
  for (int v = 0; v < n; ++v) {
    if (removed[v]) continue;
    for (int x : adj[v]) {
      if (!removed[x] && v < x) out.add_edge(new_id[v], new_id[x]);
    }
  }
  out.sort_edges();
  return out;
}

namespace {

class TreeBuilder {
 public:
  TreeBuilder(const DemandGraph& g, const SeparatorStrategy& strategy, const Rational& b,
              bool naive_unit)
      : g_(g), strategy_(strategy), b_(b), naive_unit_(naive_unit) {}

  RoutingTree build() {
    std::vector<int> all(g_.vertex_count());
    for (int v = 0; v < g_.vertex_count(); ++v) all[v] = v;
    int root = split(all);
    tree_.set_root(root);
    return shortcut_degree_two(tree_);
  }

 private:
  // Returns the root node of a routing tree for the piece (ascending
  // original vertex ids). The root has degree 2 (or is a leaf) and gains
  // its third edge when attached to the parent.
  int split(const std::vector<int>& piece) {
    if (piece.size() == 1) return tree_.add_leaf(piece[0]);
    if (piece.size() == 2) {
      int l = tree_.add_leaf(piece[0]);
      int r = tree_.add_leaf(piece[1]);
      return join(l, r);
    }

    VertexWeights u = naive_unit_ ? VertexWeights::unit(static_cast<int>(piece.size()))
                                  : outside_demand_weights(g_, piece);
    // A piece with no demand toward the rest of the graph (the top call
    // in particular) is split under unit weights: every cut is load-free
    // there, and halving by size keeps the recursion shallow.
    if (u.total() == 0) u = VertexWeights::unit(static_cast<int>(piece.size()));

    std::vector<int> left, right;
    int heavy = -1;
    for (std::size_t i = 0; i < piece.size(); ++i) {
      if (2 * u.of(static_cast<int>(i)) > u.total()) {
        heavy = static_cast<int>(i);
        break;  // ascending ids, so the first hit is the smallest
      }
    }
    if (heavy != -1) {
      left.push_back(piece[heavy]);
      for (std::size_t i = 0; i < piece.size(); ++i) {
        if (static_cast<int>(i) != heavy) right.push_back(piece[i]);
      }
    } else {
      InducedSubgraph sub = induced_subgraph(g_, piece);
      Cut side = balanced_cut(sub.graph, u, b_, strategy_);
      for (int local = 0; local < side.universe_size(); ++local) {
        (side.contains(local) ? left : right).push_back(sub.to_original[local]);
      }
    }
    int l = split(left);
    int r = split(right);
    return join(l, r);
  }

  int join(int l, int r) {
    int p = tree_.add_internal();
    tree_.add_edge(p, l);
    tree_.add_edge(p, r);
    return p;
  }

  const DemandGraph& g_;
  const SeparatorStrategy& strategy_;
  Rational b_;
  bool naive_unit_;
  RoutingTree tree_;
};

}  // namespace

RoutingTree route_tree(const DemandGraph& g, const SeparatorStrategy& strategy,
                       const Rational& b, bool naive_unit_weights) {
  if (g.vertex_count() < 1) throw InputError("route_tree: graph has no vertices");
  return TreeBuilder(g, strategy, b, naive_unit_weights).build();
}

std::uint64_t edge_load(const RoutingTree& t, const DemandGraph& g, std::pair<int, int> e) {
  if (e.first > e.second) std::swap(e.first, e.second);
  bool present = false;
  for (const auto& ed : t.edges()) {
    if (ed == e) {
      present = true;
      break;
    }
  }
  if (!present) throw InputError("edge_load: not a tree edge");

  // Leaves on e.first's side of the split.
  auto adj = t.adjacency();
  std::vector<char> seen(t.node_count(), 0);
  std::deque<int> queue{e.first};
  seen[e.first] = 1;
  VertexSet side(g.vertex_count());
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (t.is_leaf(v)) side.insert(t.leaf_vertex(v));
    for (int x : adj[v]) {
      if (seen[x]) continue;
      if (v == e.first && x == e.second) continue;
      seen[x] = 1;
      queue.push_back(x);
    }
  }
  return cut_weight(g, side);
}

std::vector<int> tree_path(const RoutingTree& t, int from_node, int to_node) {
  auto adj = t.adjacency();
  std::vector<int> parent(t.node_count(), -2);
  std::deque<int> queue{from_node};
  parent[from_node] = -1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == to_node) break;
    for (int x : adj[v]) {
      if (parent[x] == -2) {
        parent[x] = v;
        queue.push_back(x);
      }
    }
  }
  if (parent[to_node] == -2) throw InputError("tree_path: nodes not connected");
  std::vector<int> path;
  for (int v = to_node; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

CongestionReport congestion_report(const RoutingTree& t, const DemandGraph& g,
                                   bool with_separator_lb) {
  int n = g.vertex_count();
  std::vector<int> leaf = t.leaf_node_by_vertex(n);
  for (int v = 0; v < n; ++v) {
    if (leaf[v] == -1) throw InputError("congestion report: vertex has no leaf in tree");
  }
  if (t.leaf_count() != n) throw InputError("congestion report: extra leaves in tree");

  CongestionReport rep;
  std::map<std::pair<int, int>, std::size_t> edge_index;
  for (const auto& e : t.edges()) {
    edge_index[e] = rep.per_edge.size();
    rep.per_edge.emplace_back(e, edge_load(t, g, e));
  }

  // Independent recomputation: route every demand along its tree path.
  std::vector<std::uint64_t> path_loads(rep.per_edge.size(), 0);
  for (const auto& de : g.edges()) {
    std::vector<int> path = tree_path(t, leaf[de.u], leaf[de.v]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      auto key = std::minmax(path[i], path[i + 1]);
      path_loads[edge_index.at({key.first, key.second})] += de.w;
    }
  }
  for (std::size_t i = 0; i < rep.per_edge.size(); ++i) {
    if (path_loads[i] != rep.per_edge[i].second) {
      throw InvariantError("edge load mismatch between cut and path-summation methods");
    }
  }

  for (const auto& [e, load] : rep.per_edge) {
    (void)e;
    rep.congestion = std::max(rep.congestion, load);
  }
  LowerBounds lb = lower_bounds(g);
  rep.lb_vertex = lb.lb_vertex;
  if (with_separator_lb) rep.lb_separator = lb.lb_separator;

  std::uint64_t best_lb = std::max(rep.lb_vertex, rep.lb_separator.value_or(0));
  if (best_lb > 0) {
    rep.ratio_upper_cert = Rational(static_cast<std::int64_t>(rep.congestion),
                                    static_cast<std::int64_t>(best_lb));
  } else if (rep.congestion == 0) {
    rep.ratio_upper_cert = Rational(1, 1);
  }
  return rep;
}

LowerBounds lower_bounds(const DemandGraph& g) {
  LowerBounds lb;
  for (int v = 0; v < g.vertex_count(); ++v) {
    lb.lb_vertex = std::max(lb.lb_vertex, vertex_load(g, v));
  }
  if (g.vertex_count() >= 2 && g.vertex_count() <= kExactSeparatorMaxVertices) {
    Cut c = exact_min_balanced_cut(g, VertexWeights::unit(g.vertex_count()), Rational(1, 3));
    lb.lb_separator = cut_weight(g, c);
  }
  return lb;
}

bool is_valid_routing_tree(const RoutingTree& t, int n_vertices) {
  if (t.root().has_value()) return false;
  int nodes = t.node_count();
  if (static_cast<int>(t.edges().size()) != nodes - 1) return false;

  std::vector<int> leaf;
  try {
    leaf = t.leaf_node_by_vertex(n_vertices);
  } catch (const InputError&) {
    return false;
  }
  for (int v = 0; v < n_vertices; ++v) {
    if (leaf[v] == -1) return false;
  }
  if (t.leaf_count() != n_vertices) return false;

  if (n_vertices == 1) return nodes == 1;
  if (n_vertices == 2) return nodes == 2 && t.edges().size() == 1;
  if (t.internal_count() != n_vertices - 2) return false;
  for (int v = 0; v < nodes; ++v) {
    int d = t.degree(v);
    if (t.is_leaf(v) ? d != 1 : d != 3) return false;
  }
  // Connectivity; acyclicity follows from the edge count.
  auto adj = t.adjacency();
  std::vector<char> seen(nodes, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++visited;
    for (int x : adj[v]) {
      if (!seen[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
  }
  return visited == nodes;
}

}  // namespace treeweave
