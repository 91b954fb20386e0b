#include "treeweave/graph.hpp"

#include <algorithm>
#include <bit>

#include "treeweave/errors.hpp"

namespace treeweave {

VertexSet::VertexSet(int universe_size) : n_(universe_size) {
  if (universe_size < 0) throw InputError("vertex set: negative universe size");
  words_.assign((n_ + 63) / 64, 0);
}

VertexSet VertexSet::from_ids(int universe_size, const std::vector<int>& ids) {
  VertexSet s(universe_size);
  for (int v : ids) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe_size) {
  VertexSet s(universe_size);
  for (int v = 0; v < universe_size; ++v) s.insert(v);
  return s;
}

void VertexSet::check(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::contains(int v) const {
  check(v);
  return (words_[v / 64] >> (v % 64)) & 1;
}

void VertexSet::insert(int v) {
  check(v);
  words_[v / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
  check(v);
  words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

VertexSet VertexSet::complement() const {
  VertexSet s(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  if (n_ % 64 != 0 && !words_.empty()) {
    s.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }
  return s;
}

std::vector<int> VertexSet::ids() const {
  std::vector<int> out;
  out.reserve(count());
  for (int v = 0; v < n_; ++v) {
    if ((words_[v / 64] >> (v % 64)) & 1) out.push_back(v);
  }
  return out;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  std::vector<int> a = ids();
  std::vector<int> b = other.ids();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

VertexSet VertexSet::canonical_cut_side() const {
  VertexSet comp = complement();
  int c = count();
  int cc = n_ - c;
  if (c < cc) return *this;
  if (cc < c) return comp;
  return lex_less(comp) ? *this : comp;
}

DemandGraph::DemandGraph(int vertex_count, std::vector<WeightedEdge> edges,
                         std::vector<std::string> labels)
    : n_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) throw InputError("graph: negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n_) {
    throw InputError("graph: label list size does not match vertex count");
  }
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw InputError("graph: edge endpoint out of range");
    }
    if (e.u == e.v) throw InputError("graph: self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  // Merge parallel edges by summing their demands.
  for (const auto& e : edges) {
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
    } else {
      edges_.push_back(e);
    }
    total_ += e.w;
    if (total_ >= kMaxTotalWeight) throw InputError("graph: total demand exceeds 2^62");
  }
  adj_.assign(n_, {});
  for (const auto& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
  }
}

const std::vector<std::pair<int, std::uint64_t>>& DemandGraph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
  return adj_[v];
}

std::uint64_t DemandGraph::weight_between(int u, int v) const {
  for (const auto& [x, w] : neighbors(u)) {
    if (x == v) return w;
  }
  return 0;
}

const std::string& DemandGraph::label(int v) const {
  static const std::string empty;
  if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
  if (labels_.empty()) return empty;
  return labels_[v];
}

VertexWeights::VertexWeights(std::vector<std::uint64_t> weights) : w_(std::move(weights)) {
  for (std::uint64_t x : w_) {
    total_ += x;
    if (total_ >= kMaxTotalWeight) throw InputError("vertex weights: total exceeds 2^62");
  }
}

VertexWeights VertexWeights::unit(int n) {
  return VertexWeights(std::vector<std::uint64_t>(n, 1));
}

std::uint64_t VertexWeights::of(int v) const {
  if (v < 0 || v >= size()) throw InputError("vertex id " + std::to_string(v) + " out of range");
  return w_[v];
}

std::uint64_t VertexWeights::max_entry() const {
  std::uint64_t m = 0;
  for (std::uint64_t x : w_) m = std::max(m, x);
  return m;
}

std::uint64_t VertexWeights::sum_over(const VertexSet& s) const {
  if (s.universe_size() != size()) {
    throw InputError("vertex weights: set universe does not match weight domain");
  }
  std::uint64_t sum = 0;
  for (int v : s.ids()) sum += w_[v];
  return sum;
}

std::uint64_t cut_weight(const DemandGraph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count()) {
    throw InputError("cut universe does not match graph vertex count");
  }
  std::uint64_t w = 0;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) w += e.w;
  }
  return w;
}

std::uint64_t vertex_load(const DemandGraph& g, int v) {
  std::uint64_t w = 0;
  for (const auto& [x, ew] : g.neighbors(v)) {
    (void)x;
    w += ew;
  }
  return w;
}

InducedSubgraph induced_subgraph(const DemandGraph& g, const std::vector<int>& s) {
  if (s.empty()) throw InputError("induced subgraph: empty vertex subset");
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= g.vertex_count()) {
      throw InputError("induced subgraph: vertex id out of range");
    }
    if (local[v] != -1) throw InputError("induced subgraph: duplicate vertex in subset");
    local[v] = static_cast<int>(i);
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] != -1 && local[e.v] != -1) {
      edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  return {DemandGraph(static_cast<int>(sorted.size()), std::move(edges)), std::move(sorted)};
}

InducedSubgraph induced_subgraph(const DemandGraph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count()) {
    throw InputError("induced subgraph: set universe does not match graph");
  }
  return induced_subgraph(g, s.ids());
}

VertexWeights outside_demand_weights(const DemandGraph& g, const std::vector<int>& s) {
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  std::vector<char> inside(g.vertex_count(), 0);
  for (int v : sorted) {
    if (v < 0 || v >= g.vertex_count()) {
      throw InputError("outside demand weights: vertex id out of range");
    }
    inside[v] = 1;
  }
  std::vector<std::uint64_t> w(sorted.size(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (const auto& [x, ew] : g.neighbors(sorted[i])) {
      if (!inside[x]) w[i] += ew;
    }
  }
  return VertexWeights(std::move(w));
}

VertexWeights outside_demand_weights(const DemandGraph& g, const VertexSet& s) {
  if (s.universe_size() != g.vertex_count()) {
    throw InputError("outside demand weights: set universe does not match graph");
  }
  return outside_demand_weights(g, s.ids());
}

}  // namespace treeweave
