#pragma once

#include <cstdint>

#include "treeweave/graph.hpp"
#include "treeweave/rational.hpp"

namespace treeweave {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr int kExactSeparatorMaxVertices = 24;

// Which balanced-cut provider the routing recursion uses. Exact realizes
// an optimal bisector (lambda = 1) by branch and bound at small n; the
// heuristic is seeded local search with no approximation guarantee.
struct SeparatorStrategy {
  enum class Kind { Exact, Heuristic };
  Kind kind = Kind::Exact;
  std::uint64_t seed = 0;                          // Heuristic only
  int restarts = 20;                               // Heuristic only
  std::uint64_t node_budget = kDefaultNodeBudget;  // Exact only

  static SeparatorStrategy exact(std::uint64_t node_budget = kDefaultNodeBudget) {
    SeparatorStrategy s;
    s.kind = Kind::Exact;
    s.node_budget = node_budget;
    return s;
  }
  static SeparatorStrategy heuristic(std::uint64_t seed, int restarts = 20) {
    SeparatorStrategy s;
    s.kind = Kind::Heuristic;
    s.seed = seed;
    s.restarts = restarts;
    return s;
  }
};

// b*U(V) <= U(S) <= (1-b)*U(V), evaluated by cross-multiplication in
// 128-bit integers. Accepts b in (0, 1/2]; 1/2 means an exact weight
// bisection.
bool is_balanced(const VertexWeights& u, const Cut& s, const Rational& b);

// Deterministic preference order shared by every cut-producing operation:
// smaller weight, then smaller |2*U(S) - U(V)|, then lexicographically
// smallest canonical side.
struct RankedCut {
  std::uint64_t weight = 0;
  std::uint64_t imbalance = 0;
  Cut side;  // canonical
};
RankedCut rank_cut(const DemandGraph& g, const VertexWeights& u, const Cut& s);
bool ranked_less(const RankedCut& a, const RankedCut& b);

// Minimum-weight b-balanced cut by branch and bound over vertex
// assignments in decreasing U(v) order. Throws NoBalancedCutError when no
// b-balanced cut exists, BudgetExceededError past node_budget, InputError
// when n exceeds max_vertices.
Cut exact_min_balanced_cut(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                           std::uint64_t node_budget = kDefaultNodeBudget,
                           int max_vertices = kExactSeparatorMaxVertices);

// Seeded multi-restart local search: each restart builds a random greedy
// partition, repairs it to balance, then hill-climbs with single-vertex
// moves and pair swaps that strictly reduce cut weight while staying
// balanced. Fully determined by (seed, restarts). The returned cut is
// balanced but carries no approximation guarantee.
Cut heuristic_balanced_cut(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                           const SeparatorStrategy& strategy);

// Dispatches on strategy.kind.
Cut balanced_cut(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                 const SeparatorStrategy& strategy);

// heuristic weight / exact optimum weight; 1/1 when both are zero.
// Throws InvariantError when the exact optimum is 0 but the heuristic cut
// is not (the ratio is undefined there).
Rational empirical_lambda(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                          const SeparatorStrategy& strategy);

}  // namespace treeweave
