#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace treeweave {

// Canonical subset of a fixed vertex universe 0..n-1, stored as a packed
// bit array. Equality and iteration order are well-defined, so identical
// inputs always produce identical cuts.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe_size);
  static VertexSet from_ids(int universe_size, const std::vector<int>& ids);
  static VertexSet full(int universe_size);

  int universe_size() const { return n_; }
  int count() const;
  bool empty() const { return count() == 0; }
  bool is_proper() const {
    int c = count();
    return c > 0 && c < n_;
  }
  bool contains(int v) const;
  void insert(int v);
  void erase(int v);
  VertexSet complement() const;
  std::vector<int> ids() const;  // ascending

  // Lexicographic order of the ascending id sequences.
  bool lex_less(const VertexSet& other) const;

  // The side that canonically represents the cut {S, V\S}: the smaller
  // side, ties broken lexicographically.
  VertexSet canonical_cut_side() const;

  bool operator==(const VertexSet& o) const = default;

 private:
  void check(int v) const;
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// A cut is represented by one of its sides plus the universe it lives in.
using Cut = VertexSet;

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::uint64_t w = 0;
  bool operator==(const WeightedEdge&) const = default;
};

// Total demand must stay below 2^62 so that any sum of edge weights,
// including the doubled total used in load identities, fits in 64 bits.
inline constexpr std::uint64_t kMaxTotalWeight = std::uint64_t{1} << 62;

// Undirected multicommodity demand network. Immutable after construction:
// parallel input edges are merged by summing their weights, self-loops are
// rejected, and the edge list is kept sorted with u < v.
class DemandGraph {
 public:
  DemandGraph() = default;
  explicit DemandGraph(int vertex_count, std::vector<WeightedEdge> edges = {},
                       std::vector<std::string> labels = {});

  int vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::uint64_t total_weight() const { return total_; }
  const std::vector<std::pair<int, std::uint64_t>>& neighbors(int v) const;
  std::uint64_t weight_between(int u, int v) const;  // 0 when not adjacent
  const std::string& label(int v) const;
  bool has_labels() const { return !labels_.empty(); }

  bool operator==(const DemandGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<int, std::uint64_t>>> adj_;
  std::vector<std::string> labels_;
  std::uint64_t total_ = 0;
};

// Non-negative vertex weights U(v) over a dense vertex range, with the
// total U(V) cached. When built by outside_demand_weights the domain is
// the subset's dense re-indexing, i.e. the induced subgraph's vertex set.
class VertexWeights {
 public:
  VertexWeights() = default;
  explicit VertexWeights(std::vector<std::uint64_t> weights);
  static VertexWeights unit(int n);

  int size() const { return static_cast<int>(w_.size()); }
  std::uint64_t of(int v) const;
  std::uint64_t total() const { return total_; }
  std::uint64_t max_entry() const;
  std::uint64_t sum_over(const VertexSet& s) const;
  const std::vector<std::uint64_t>& values() const { return w_; }

 private:
  std::vector<std::uint64_t> w_;
  std::uint64_t total_ = 0;
};

// W(S, V\S): total weight of edges with exactly one endpoint in S.
std::uint64_t cut_weight(const DemandGraph& g, const VertexSet& s);

// W(v): total weight incident to v; equals cut_weight(g, {v}).
std::uint64_t vertex_load(const DemandGraph& g, int v);

struct InducedSubgraph {
  DemandGraph graph;             // vertices re-indexed densely
  std::vector<int> to_original;  // local id -> original id, ascending
};

// Subgraph induced by s (given as ascending original ids, nonempty).
InducedSubgraph induced_subgraph(const DemandGraph& g, const std::vector<int>& s);
InducedSubgraph induced_subgraph(const DemandGraph& g, const VertexSet& s);

// U(v) = demand from v to the complement of s, indexed by position in s
// (the induced subgraph's dense ids). total() equals cut_weight(g, s).
VertexWeights outside_demand_weights(const DemandGraph& g, const std::vector<int>& s);
VertexWeights outside_demand_weights(const DemandGraph& g, const VertexSet& s);

}  // namespace treeweave
