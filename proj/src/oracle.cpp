#include "treeweave/oracle.hpp"

#include <algorithm>

#include "treeweave/errors.hpp"
#include "treeweave/separator.hpp"

namespace treeweave {

std::uint64_t routing_tree_topology_count(int n) {
  if (n < 1) throw InputError("topology count: n must be >= 1");
  std::uint64_t c = 1;
  for (int k = 4; k <= n; ++k) c *= 2 * k - 5;
  return c;
}

std::uint64_t spanning_tree_count(int n) {
  if (n < 2) throw InputError("spanning tree count: n must be >= 2");
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= n;
  return c;
}

TopologyIterator::TopologyIterator(std::vector<int> leaf_labels, int cap)
    : labels_(std::move(leaf_labels)) {
  int n = static_cast<int>(labels_.size());
  if (n < 1) throw InputError("topology enumeration: need at least one leaf");
  if (n > cap) {
    throw InputError("topology enumeration: n=" + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  if (n >= 4) digits_.assign(n - 3, 0);
}

bool TopologyIterator::advance() {
  for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i) {
    if (++digits_[i] < 2 * i + 3) return true;
    digits_[i] = 0;
  }
  return false;
}

RoutingTree TopologyIterator::decode() const {
  int n = static_cast<int>(labels_.size());
  RoutingTree t;
  for (int k = 0; k < n; ++k) t.add_leaf(labels_[k]);
  if (n == 1) return t;
  if (n == 2) {
    t.add_edge(0, 1);
    t.sort_edges();
    return t;
  }
  std::vector<std::pair<int, int>> edges;
  int hub = t.add_internal();  // node id n
  edges = {{0, hub}, {1, hub}, {2, hub}};
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    auto [a, b] = edges[digits_[i]];
    int mid = t.add_internal();
    edges[digits_[i]] = {a, mid};
    edges.emplace_back(mid, b);
    edges.emplace_back(mid, static_cast<int>(3 + i));
  }
  for (const auto& [a, b] : edges) t.add_edge(a, b);
  t.sort_edges();
  return t;
}

std::optional<RoutingTree> TopologyIterator::next() {
  if (done_) return std::nullopt;
  if (first_) {
    first_ = false;
    return decode();
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return decode();
}

TopologyIterator enum_routing_trees(std::vector<int> leaf_labels, int cap) {
  return TopologyIterator(std::move(leaf_labels), cap);
}

OptCongestion brute_opt_congestion(const DemandGraph& g, int cap) {
  int n = g.vertex_count();
  std::vector<int> labels(n);
  for (int v = 0; v < n; ++v) labels[v] = v;
  TopologyIterator it(labels, cap);

  bool found = false;
  OptCongestion best;
  while (auto t = it.next()) {
    // Evaluate loads with early exit once the incumbent cannot be beaten.
    std::uint64_t congestion = 0;
    bool beaten = false;
    for (const auto& e : t->edges()) {
      std::uint64_t load = edge_load(*t, g, e);
      congestion = std::max(congestion, load);
      if (found && congestion >= best.congestion) {
        beaten = true;
        break;
      }
    }
    if (!found || (!beaten && congestion < best.congestion)) {
      best.tree = std::move(*t);
      best.congestion = congestion;
      found = true;
      if (best.congestion == 0) break;  // cannot improve
    }
  }
  return best;
}

SpanningTreeIterator::SpanningTreeIterator(int n, int cap) : n_(n) {
  if (n < 2) throw InputError("spanning tree enumeration: n must be >= 2");
  if (n > cap) {
    throw InputError("spanning tree enumeration: n=" + std::to_string(n) + " exceeds cap " +
                     std::to_string(cap));
  }
  seq_.assign(n - 2, 0);
}

std::optional<std::vector<std::pair<int, int>>> SpanningTreeIterator::next() {
  if (done_) return std::nullopt;
  if (!first_) {
    bool carried = false;
    for (int i = static_cast<int>(seq_.size()) - 1; i >= 0; --i) {
      if (++seq_[i] < n_) {
        carried = true;
        break;
      }
      seq_[i] = 0;
    }
    if (!carried) {
      done_ = true;
      return std::nullopt;
    }
  }
  first_ = false;

  // Prufer decoding.
  std::vector<int> degree(n_, 1);
  for (int s : seq_) ++degree[s];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n_ - 1);
  for (int s : seq_) {
    for (int v = 0; v < n_; ++v) {
      if (degree[v] == 1) {
        edges.emplace_back(std::min(v, s), std::max(v, s));
        --degree[v];
        --degree[s];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n_; ++v) {
    if (degree[v] == 1) {
      if (a == -1) {
        a = v;
      } else {
        edges.emplace_back(a, v);
      }
    }
  }
  return edges;
}

SpanningTreeIterator enum_spanning_trees(int n, int cap) {
  return SpanningTreeIterator(n, cap);
}

namespace {

// Max induced-cut load over the edges of a labeled tree on g's vertices.
std::uint64_t spanning_congestion(const DemandGraph& g,
                                  const std::vector<std::pair<int, int>>& edges) {
  int n = g.vertex_count();
  std::uint64_t worst = 0;
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    // Component of edges[skip].first with that edge removed.
    VertexSet side(n);
    std::vector<int> stack{edges[skip].first};
    side.insert(edges[skip].first);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < edges.size(); ++j) {
        if (j == skip) continue;
        int x = -1;
        if (edges[j].first == v) x = edges[j].second;
        if (edges[j].second == v) x = edges[j].first;
        if (x >= 0 && !side.contains(x)) {
          side.insert(x);
          stack.push_back(x);
        }
      }
    }
    worst = std::max(worst, cut_weight(g, side));
  }
  return worst;
}

}  // namespace

OptSpanning brute_opt_spanning_congestion(const DemandGraph& g, int cap) {
  int n = g.vertex_count();
  SpanningTreeIterator it(n, cap);
  bool found = false;
  OptSpanning best;
  while (auto edges = it.next()) {
    std::uint64_t c = spanning_congestion(g, *edges);
    if (!found || c < best.congestion) {
      best.tree = std::move(*edges);
      best.congestion = c;
      found = true;
    }
  }
  return best;
}

BalancedCutIterator::BalancedCutIterator(const DemandGraph& g, const VertexWeights& u,
                                         const Rational& b, int cap)
    : n_(g.vertex_count()), u_(u), b_(b) {
  if (u.size() != n_) throw InputError("balanced cut enumeration: weight domain mismatch");
  if (n_ > cap) {
    throw InputError("balanced cut enumeration: n=" + std::to_string(n_) + " exceeds cap " +
                     std::to_string(cap));
  }
  mask_ = 1;
}

std::optional<Cut> BalancedCutIterator::next() {
  const std::uint64_t end = n_ >= 1 ? (std::uint64_t{1} << n_) - 1 : 0;
  for (; mask_ < end; ++mask_) {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) {
      if ((mask_ >> v) & 1) s.insert(v);
    }
    if (!(s.canonical_cut_side() == s)) continue;  // each cut yielded once
    if (!is_balanced(u_, s, b_)) continue;
    ++mask_;
    return s;
  }
  return std::nullopt;
}

BalancedCutIterator enum_balanced_cuts(const DemandGraph& g, const VertexWeights& u,
                                       const Rational& b, int cap) {
  return BalancedCutIterator(g, u, b, cap);
}

}  // namespace treeweave
