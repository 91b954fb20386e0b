#include "treeweave/separator.hpp"

#include <algorithm>
#include <optional>

#include "treeweave/errors.hpp"
#include "treeweave/rng.hpp"

namespace treeweave {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

void validate_fraction(const Rational& b) {
  if (b.num < 1 || b.den < 1 || 2 * b.num > b.den) {
    throw InputError("balance fraction must lie in (0, 1/2], got " + b.str());
  }
}

// b*total <= x
bool reaches_lower(const Rational& b, std::uint64_t x, std::uint64_t total) {
  return static_cast<u128>(b.num) * total <= static_cast<u128>(b.den) * x;
}

// x <= (1-b)*total
bool within_upper(const Rational& b, std::uint64_t x, std::uint64_t total) {
  return static_cast<u128>(b.den) * x <= static_cast<u128>(b.den - b.num) * total;
}

bool side_balanced(const Rational& b, std::uint64_t x, std::uint64_t total) {
  return reaches_lower(b, x, total) && within_upper(b, x, total);
}

std::uint64_t imbalance_of(std::uint64_t us, std::uint64_t total) {
  std::uint64_t twice = 2 * us;
  return twice >= total ? twice - total : total - twice;
}

// Branch and bound over the vertices in decreasing U(v) order. A partial
// assignment is pruned when its crossing weight already exceeds the
// incumbent (strictly, so weight ties survive for the imbalance/lex
// tie-break) or when the unassigned weight cannot restore balance.
class ExactSearch {
 public:
  ExactSearch(const DemandGraph& g, const VertexWeights& u, const Rational& b,
              std::uint64_t budget)
      : g_(g), u_(u), b_(b), budget_(budget), n_(g.vertex_count()) {
    total_ = u_.total();
    order_.resize(n_);
    for (int v = 0; v < n_; ++v) order_[v] = v;
    std::sort(order_.begin(), order_.end(), [&](int a, int c) {
      if (u_.of(a) != u_.of(c)) return u_.of(a) > u_.of(c);
      return a < c;
    });
    suffix_.assign(n_ + 1, 0);
    for (int k = n_ - 1; k >= 0; --k) suffix_[k] = suffix_[k + 1] + u_.of(order_[k]);
    side_.assign(n_, -1);
  }

  std::optional<RankedCut> run() {
    descend(0);
    if (!found_) return std::nullopt;
    return best_;
  }

 private:
  void descend(int k) {
    if (++nodes_ > budget_) {
      throw BudgetExceededError("exact separator: node budget exhausted");
    }
    if (k == n_) {
      take_leaf();
      return;
    }
    int v = order_[k];
    std::uint64_t to_a = 0, to_b = 0;
    for (const auto& [x, w] : g_.neighbors(v)) {
      if (side_[x] == 0) to_a += w;
      if (side_[x] == 1) to_b += w;
    }
    // The first vertex is pinned to side A; a cut equals its complement.
    try_side(k, v, 0, to_b);
    if (k > 0) try_side(k, v, 1, to_a);
  }

  void try_side(int k, int v, int s, std::uint64_t crossing_gain) {
    std::uint64_t nw = weight_ + crossing_gain;
    if (found_ && nw > best_.weight) return;
    std::uint64_t nua = ua_ + (s == 0 ? u_.of(v) : 0);
    std::uint64_t nub = ub_ + (s == 1 ? u_.of(v) : 0);
    if (!within_upper(b_, nua, total_) || !within_upper(b_, nub, total_)) return;
    std::uint64_t rest = suffix_[k + 1];
    if (!reaches_lower(b_, nua + rest, total_) || !reaches_lower(b_, nub + rest, total_)) return;

    side_[v] = static_cast<std::int8_t>(s);
    std::uint64_t pw = weight_, pa = ua_, pb = ub_;
    int pna = na_, pnb = nb_;
    weight_ = nw;
    ua_ = nua;
    ub_ = nub;
    (s == 0 ? na_ : nb_) += 1;
    descend(k + 1);
    side_[v] = -1;
    weight_ = pw;
    ua_ = pa;
    ub_ = pb;
    na_ = pna;
    nb_ = pnb;
  }

  void take_leaf() {
    if (na_ == 0 || nb_ == 0) return;
    if (!side_balanced(b_, ua_, total_)) return;
    std::uint64_t imb = imbalance_of(ua_, total_);
    if (found_) {
      if (weight_ > best_.weight) return;
      if (weight_ == best_.weight && imb > best_.imbalance) return;
    }
    VertexSet a(n_);
    for (int v = 0; v < n_; ++v) {
      if (side_[v] == 0) a.insert(v);
    }
    Cut canon = a.canonical_cut_side();
    if (found_ && weight_ == best_.weight && imb == best_.imbalance &&
        !canon.lex_less(best_.side)) {
      return;
    }
    best_ = RankedCut{weight_, imb, std::move(canon)};
    found_ = true;
  }

  const DemandGraph& g_;
  const VertexWeights& u_;
  Rational b_;
  std::uint64_t budget_;
  int n_;
  std::uint64_t total_ = 0;
  std::vector<int> order_;
  std::vector<std::uint64_t> suffix_;
  std::vector<std::int8_t> side_;
  std::uint64_t nodes_ = 0;
  std::uint64_t weight_ = 0, ua_ = 0, ub_ = 0;
  int na_ = 0, nb_ = 0;
  bool found_ = false;
  RankedCut best_;
};

// Partition state for the heuristic: side[v] in {0, 1}, with running
// weight sums and counts per side.
struct Partition {
  std::vector<std::int8_t> side;
  std::uint64_t ua = 0, ub = 0;
  int na = 0, nb = 0;

  void assign(int v, int s, const VertexWeights& u) {
    side[v] = static_cast<std::int8_t>(s);
    (s == 0 ? ua : ub) += u.of(v);
    (s == 0 ? na : nb) += 1;
  }
  void flip(int v, const VertexWeights& u) {
    if (side[v] == 0) {
      ua -= u.of(v);
      ub += u.of(v);
      --na;
      ++nb;
    } else {
      ub -= u.of(v);
      ua += u.of(v);
      --nb;
      ++na;
    }
    side[v] = static_cast<std::int8_t>(1 - side[v]);
  }
};

// Moves the lightest vertex off the overweight side until balanced.
// Bounded number of moves; reports failure instead of cycling.
bool repair_balance(Partition& p, const VertexWeights& u, const Rational& b) {
  const std::uint64_t total = u.total();
  int n = static_cast<int>(p.side.size());
  for (int step = 0; step < 4 * n + 8; ++step) {
    if (side_balanced(b, p.ua, total)) return true;
    int heavy = within_upper(b, p.ua, total) ? 1 : 0;
    if ((heavy == 0 ? p.na : p.nb) <= 1) return false;
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (p.side[v] != heavy) continue;
      if (pick == -1 || u.of(v) < u.of(pick)) pick = v;
    }
    p.flip(pick, u);
  }
  return false;
}

// First-improvement-free hill climb: applies the best strictly improving
// single move, falling back to the best strictly improving swap, until
// neither exists. Every applied step reduces the integer cut weight, so
// termination is unconditional.
void local_search(Partition& p, const DemandGraph& g, const VertexWeights& u,
                  const Rational& b) {
  const std::uint64_t total = u.total();
  int n = g.vertex_count();
  std::vector<std::uint64_t> cross(n), same(n);
  for (;;) {
    std::fill(cross.begin(), cross.end(), 0);
    std::fill(same.begin(), same.end(), 0);
    for (const auto& e : g.edges()) {
      if (p.side[e.u] == p.side[e.v]) {
        same[e.u] += e.w;
        same[e.v] += e.w;
      } else {
        cross[e.u] += e.w;
        cross[e.v] += e.w;
      }
    }

    int move_v = -1;
    i128 move_delta = 0;
    for (int v = 0; v < n; ++v) {
      if ((p.side[v] == 0 ? p.na : p.nb) <= 1) continue;
      std::uint64_t nua = p.side[v] == 0 ? p.ua - u.of(v) : p.ua + u.of(v);
      if (!side_balanced(b, nua, total)) continue;
      i128 delta = static_cast<i128>(same[v]) - static_cast<i128>(cross[v]);
      if (delta < move_delta) {
        move_delta = delta;
        move_v = v;
      }
    }
    if (move_v != -1) {
      p.flip(move_v, u);
      continue;
    }

    int swap_a = -1, swap_b = -1;
    i128 swap_delta = 0;
    for (int a = 0; a < n; ++a) {
      if (p.side[a] != 0) continue;
      for (int c = 0; c < n; ++c) {
        if (p.side[c] != 1) continue;
        std::uint64_t nua = p.ua - u.of(a) + u.of(c);
        if (!side_balanced(b, nua, total)) continue;
        i128 delta = static_cast<i128>(same[a]) - static_cast<i128>(cross[a]) +
                     static_cast<i128>(same[c]) - static_cast<i128>(cross[c]) +
                     2 * static_cast<i128>(g.weight_between(a, c));
        if (delta < swap_delta) {
          swap_delta = delta;
          swap_a = a;
          swap_b = c;
        }
      }
    }
    if (swap_a != -1) {
      p.flip(swap_a, u);
      p.flip(swap_b, u);
      continue;
    }
    return;
  }
}

Cut side_a_cut(const Partition& p) {
  VertexSet s(static_cast<int>(p.side.size()));
  for (int v = 0; v < static_cast<int>(p.side.size()); ++v) {
    if (p.side[v] == 0) s.insert(v);
  }
  return s;
}

// Deterministic constructions used when every random restart fails to
// produce any balanced partition: the descending-weight greedy prefix,
// then each singleton. For b <= 1/3 one of these is balanced whenever a
// balanced cut exists at all.
std::optional<Partition> fallback_partition(const VertexWeights& u, const Rational& b) {
  const std::uint64_t total = u.total();
  int n = u.size();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int c) {
    if (u.of(a) != u.of(c)) return u.of(a) > u.of(c);
    return a < c;
  });

  Partition prefix{std::vector<std::int8_t>(n, 1), 0, total, 0, n};
  for (int k = 0; k < n - 1; ++k) {
    prefix.flip(order[k], u);
    if (reaches_lower(b, prefix.ua, total)) {
      if (side_balanced(b, prefix.ua, total)) return prefix;
      break;
    }
  }
  for (int v = 0; v < n && n >= 2; ++v) {
    if (side_balanced(b, u.of(v), total)) {
      Partition single{std::vector<std::int8_t>(n, 1), 0, total, 0, n};
      single.flip(v, u);
      return single;
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_balanced(const VertexWeights& u, const Cut& s, const Rational& b) {
  validate_fraction(b);
  if (s.universe_size() != u.size()) {
    throw InputError("is_balanced: cut universe does not match weight domain");
  }
  return side_balanced(b, u.sum_over(s), u.total());
}

RankedCut rank_cut(const DemandGraph& g, const VertexWeights& u, const Cut& s) {
  return RankedCut{cut_weight(g, s), imbalance_of(u.sum_over(s), u.total()),
                   s.canonical_cut_side()};
}

bool ranked_less(const RankedCut& a, const RankedCut& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.imbalance != b.imbalance) return a.imbalance < b.imbalance;
  return a.side.lex_less(b.side);
}

Cut exact_min_balanced_cut(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                           std::uint64_t node_budget, int max_vertices) {
  validate_fraction(b);
  if (u.size() != g.vertex_count()) {
    throw InputError("exact separator: weight domain does not match graph");
  }
  if (g.vertex_count() > max_vertices) {
    throw InputError("exact separator: graph has " + std::to_string(g.vertex_count()) +
                     " vertices, limit is " + std::to_string(max_vertices));
  }
  if (g.vertex_count() < 2) throw NoBalancedCutError();
  ExactSearch search(g, u, b, node_budget);
  auto best = search.run();
  if (!best) throw NoBalancedCutError();
  return best->side;
}

Cut heuristic_balanced_cut(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                           const SeparatorStrategy& strategy) {
  validate_fraction(b);
  if (u.size() != g.vertex_count()) {
    throw InputError("heuristic separator: weight domain does not match graph");
  }
  if (strategy.restarts < 1) throw InputError("heuristic separator: restarts must be >= 1");
  int n = g.vertex_count();
  if (n < 2) throw NoBalancedCutError();
  const std::uint64_t total = u.total();
  for (int v = 0; v < n; ++v) {
    if (!within_upper(b, u.of(v), total)) {
      throw NoBalancedCutError("no balanced cut: vertex " + std::to_string(v) +
                               " alone outweighs (1-b)*U(V)");
    }
  }

  bool found = false;
  RankedCut best;
  auto consider = [&](Partition& p) {
    local_search(p, g, u, b);
    RankedCut r = rank_cut(g, u, side_a_cut(p));
    if (!found || ranked_less(r, best)) {
      best = std::move(r);
      found = true;
    }
  };

  SplitMix64 rng(strategy.seed);
  std::vector<int> perm(n);
  for (int r = 0; r < strategy.restarts; ++r) {
    for (int v = 0; v < n; ++v) perm[v] = v;
    rng.shuffle(perm);
    Partition p{std::vector<std::int8_t>(n, 0), 0, 0, 0, 0};
    std::fill(p.side.begin(), p.side.end(), std::int8_t{-1});
    for (int v : perm) {
      int s;
      if (p.ua != p.ub) {
        s = p.ua < p.ub ? 0 : 1;
      } else {
        s = p.na <= p.nb ? 0 : 1;
      }
      p.assign(v, s, u);
    }
    if (!repair_balance(p, u, b)) continue;
    consider(p);
  }

  if (!found) {
    auto fb = fallback_partition(u, b);
    if (!fb) throw NoBalancedCutError();
    consider(*fb);
  }
  return best.side;
}

Cut balanced_cut(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                 const SeparatorStrategy& strategy) {
  if (strategy.kind == SeparatorStrategy::Kind::Exact) {
    return exact_min_balanced_cut(g, u, b, strategy.node_budget);
  }
  return heuristic_balanced_cut(g, u, b, strategy);
}

Rational empirical_lambda(const DemandGraph& g, const VertexWeights& u, const Rational& b,
                          const SeparatorStrategy& strategy) {
  Cut exact = exact_min_balanced_cut(g, u, b, strategy.node_budget);
  Cut heur = heuristic_balanced_cut(g, u, b, strategy);
  std::uint64_t we = cut_weight(g, exact);
  std::uint64_t wh = cut_weight(g, heur);
  if (we == 0 && wh == 0) return Rational(1, 1);
  if (we == 0) {
    throw InvariantError("empirical lambda undefined: exact optimum 0, heuristic positive");
  }
  return Rational(static_cast<std::int64_t>(wh), static_cast<std::int64_t>(we));
}

}  // namespace treeweave
