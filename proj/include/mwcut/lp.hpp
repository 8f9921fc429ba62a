#pragma once

#include "mwcut/graph.hpp"
#include "mwcut/rational.hpp"
#include "mwcut/simplex.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mwcut {

/// Weights d_v on the non-terminal vertices.
using Assignment = std::map<VertexId, Rational>;

/// Terminal pairs that must be separated. Plain multiway cut demands every pair.
struct DemandSet {
  std::vector<std::pair<VertexId, VertexId>> pairs;

  static DemandSet all_pairs(const VertexSet& terminals) {
    DemandSet d;
    for (auto a = terminals.begin(); a != terminals.end(); ++a) {
      for (auto b = std::next(a); b != terminals.end(); ++b) d.pairs.emplace_back(*a, *b);
    }
    return d;
  }

  /// Every vertex appearing in some pair.
  VertexSet endpoints() const {
    VertexSet out;
    for (auto [s, t] : pairs) {
      out.insert(s);
      out.insert(t);
    }
    return out;
  }
};

struct LPResult {
  Rational value;
  Assignment assignment;
};

/// Counters shared by everything that solves LPs.
struct LpStats {
  std::size_t solves = 0;
  std::size_t rounds = 0;
  std::size_t pivots = 0;
};

/// A terminal-to-terminal path and its interior weight.
struct WeightedPath {
  std::vector<VertexId> vertices;
  Rational weight;
};

namespace detail {

// Dense LP context shared by the cutting-plane loop and the separation oracle.
struct LpFrame {
  IndexedGraph ig;
  std::vector<bool> terminal;
  std::vector<bool> pinned;
  std::vector<std::pair<int, int>> pairs;
  // With the complete demand set a violated path always contains a violated
  // sub-path whose interior avoids terminals, so terminals are never entered.
  // For partial demand sets terminals are passable at zero cost.
  bool terminals_passable = false;

  LpFrame(const Graph& g, const VertexSet& terminals, const DemandSet& demands, const VertexSet& pinned_zero)
      : ig(g), terminal(ig.size(), false), pinned(ig.size(), false) {
    for (VertexId t : terminals) terminal[ig.require(t)] = true;
    for (VertexId v : pinned_zero) {
      int i = ig.require(v);
      if (terminal[i]) throw InputError("cannot pin terminal " + std::to_string(v));
      pinned[i] = true;
    }
    std::set<std::pair<int, int>> seen;
    for (auto [s, t] : demands.pairs) {
      int a = ig.require(s);
      int b = ig.require(t);
      if (a == b) throw InputError("demand pair with identical endpoints " + std::to_string(s));
      if (!terminal[a] || !terminal[b]) throw InputError("demand pair endpoints must be terminals");
      if (a > b) std::swap(a, b);
      if (seen.insert({a, b}).second) pairs.emplace_back(a, b);
    }
    std::size_t t_count = terminals.size();
    terminals_passable = pairs.size() != t_count * (t_count - (t_count > 0 ? 1 : 0)) / 2;
  }

  // Demanded pair connected through terminals and pinned vertices only.
  bool infeasible() const {
    const int n = ig.size();
    for (auto [s, t] : pairs) {
      std::vector<bool> seen(n, false);
      std::vector<int> stack{s};
      seen[s] = true;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : ig.adj[v]) {
          if (u == t) return true;
          if (seen[u] || !(terminal[u] || pinned[u])) continue;
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    return false;
  }

  // Lexicographic (weight, hops) Dijkstra from terminal s; pred[v] is the
  // smallest-index predecessor attaining v's label.
  struct Labels {
    std::vector<std::optional<Rational>> weight;
    std::vector<int> hops;
    std::vector<int> pred;
  };

  Labels shortest_paths(int s, const std::vector<Rational>& w) const {
    const int n = ig.size();
    Labels lab{std::vector<std::optional<Rational>>(n), std::vector<int>(n, 0), std::vector<int>(n, -1)};
    std::vector<bool> done(n, false);
    lab.weight[s] = Rational(0);
    while (true) {
      int v = -1;
      for (int i = 0; i < n; ++i) {
        if (done[i] || !lab.weight[i]) continue;
        if (v < 0 || *lab.weight[i] < *lab.weight[v] ||
            (*lab.weight[i] == *lab.weight[v] && lab.hops[i] < lab.hops[v])) {
          v = i;
        }
      }
      if (v < 0) break;
      done[v] = true;
      if (v != s && terminal[v] && !terminals_passable) continue;  // path endpoint
      for (int u : ig.adj[v]) {
        if (done[u]) continue;
        Rational cand = *lab.weight[v] + (terminal[u] ? Rational(0) : w[u]);
        int cand_hops = lab.hops[v] + 1;
        bool better = !lab.weight[u] || cand < *lab.weight[u] ||
                      (cand == *lab.weight[u] && (cand_hops < lab.hops[u] || (cand_hops == lab.hops[u] && v < lab.pred[u])));
        if (better) {
          lab.weight[u] = cand;
          lab.hops[u] = cand_hops;
          lab.pred[u] = v;
        }
      }
    }
    return lab;
  }

  struct DensePath {
    std::vector<int> vertices;
    Rational weight;
    int hops;
  };

  // Minimum (weight, hops) path for every demanded pair, in pair order.
  // Weights are indexed by dense vertex; terminals' entries are ignored.
  std::vector<std::optional<DensePath>> pair_paths(const std::vector<Rational>& w) const {
    std::vector<std::optional<DensePath>> out(pairs.size());
    std::map<int, Labels> by_source;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [s, t] = pairs[p];
      auto it = by_source.find(s);
      if (it == by_source.end()) it = by_source.emplace(s, shortest_paths(s, w)).first;
      const Labels& lab = it->second;
      if (!lab.weight[t]) continue;
      DensePath path{{}, *lab.weight[t], lab.hops[t]};
      for (int v = t; v != -1; v = lab.pred[v]) path.vertices.push_back(v);
      std::reverse(path.vertices.begin(), path.vertices.end());
      out[p] = std::move(path);
    }
    return out;
  }

  // Interior vertices carrying an LP variable (non-terminal, not pinned).
  std::vector<int> support(const DensePath& path) const {
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
      int v = path.vertices[i];
      if (!terminal[v] && !pinned[v]) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Rational> dense_weights(const Assignment& asg) const {
    std::vector<Rational> w(ig.size());
    for (int i = 0; i < ig.size(); ++i) {
      if (terminal[i]) continue;
      auto it = asg.find(ig.ids[i]);
      if (it == asg.end()) throw InputError("assignment lacks vertex " + std::to_string(ig.ids[i]));
      if (it->second.sign() < 0) throw InputError("negative weight on vertex " + std::to_string(ig.ids[i]));
      w[i] = it->second;
    }
    return w;
  }

  WeightedPath to_path(const DensePath& p) const {
    WeightedPath out;
    out.weight = p.weight;
    for (int v : p.vertices) out.vertices.push_back(ig.ids[v]);
    return out;
  }
};

}  // namespace detail

/// Most violated demanded path under `asg`, or nullopt when `asg` is feasible.
/// Among minimum-weight paths the one with fewest vertices wins; remaining
/// ties go to the earlier demand pair, then to smallest-id predecessors.
inline std::optional<WeightedPath> separation_oracle(const Graph& g, const VertexSet& terminals,
                                                     const DemandSet& demands, const Assignment& asg) {
  detail::LpFrame frame(g, terminals, demands, {});
  auto paths = frame.pair_paths(frame.dense_weights(asg));
  const detail::LpFrame::DensePath* best = nullptr;
  for (const auto& p : paths) {
    if (!p || p->weight >= Rational(1)) continue;
    if (!best || p->weight < best->weight || (p->weight == best->weight && p->hops < best->hops)) best = &*p;
  }
  if (!best) return std::nullopt;
  return frame.to_path(*best);
}

/// Exact optimum of the path LP with `pinned_zero` vertices forced to 0.
/// Returns nullopt when the LP is infeasible.
///
/// Cutting-plane loop: solve the LP over the constraints found so far, then
/// add, for every demanded pair, its minimum-weight path if that path is
/// violated. Terminates because each round adds a constraint not yet present.
inline std::optional<LPResult> solve_lp(const Graph& g, const VertexSet& terminals, const DemandSet& demands,
                                        const VertexSet& pinned_zero = {}, LpStats* stats = nullptr) {
  detail::LpFrame frame(g, terminals, demands, pinned_zero);
  if (frame.infeasible()) return std::nullopt;
  if (stats) ++stats->solves;

  const int n = frame.ig.size();
  std::vector<int> var_of(n, -1);
  std::vector<int> vertex_of;
  for (int i = 0; i < n; ++i) {
    if (!frame.terminal[i] && !frame.pinned[i]) {
      var_of[i] = static_cast<int>(vertex_of.size());
      vertex_of.push_back(i);
    }
  }

  detail::CoveringLp lp(static_cast<int>(vertex_of.size()));
  std::set<std::vector<int>> pool;
  std::vector<Rational> w(n);
  Rational previous(0);
  while (true) {
    if (stats) ++stats->rounds;
    bool added = false;
    for (const auto& p : frame.pair_paths(w)) {
      if (!p || p->weight >= Rational(1)) continue;
      std::vector<int> cols;
      for (int v : frame.support(*p)) cols.push_back(var_of[v]);
      if (!pool.insert(cols).second) continue;
      lp.add_constraint(cols);
      added = true;
    }
    if (!added) break;
    std::size_t before = lp.pivots();
    lp.solve();
    if (stats) stats->pivots += lp.pivots() - before;
    if (lp.value() < previous) throw ConsistencyError("cutting-plane LP value decreased");
    previous = lp.value();
    auto d = lp.solution();
    for (std::size_t j = 0; j < vertex_of.size(); ++j) w[vertex_of[j]] = d[j];
  }

  LPResult result;
  result.value = lp.value();
  for (int i = 0; i < n; ++i) {
    if (!frame.terminal[i]) result.assignment[frame.ig.ids[i]] = w[i];
  }
  return result;
}

inline std::optional<LPResult> solve_lp(const Instance& inst, const VertexSet& pinned_zero = {},
                                        LpStats* stats = nullptr) {
  return solve_lp(inst.graph, inst.terminals, DemandSet::all_pairs(inst.terminals), pinned_zero, stats);
}

/// Sum of the weights.
inline Rational assignment_cost(const Assignment& asg) {
  Rational total;
  for (const auto& [v, d] : asg) total += d;
  return total;
}

/// True iff `asg` is nonnegative and every demanded path has weight >= 1.
inline bool is_feasible(const Graph& g, const VertexSet& terminals, const DemandSet& demands, const Assignment& asg) {
  for (const auto& [v, d] : asg) {
    if (d.sign() < 0) return false;
  }
  return !separation_oracle(g, terminals, demands, asg);
}

/// Zero area U_t: the closure of t under steps into terminals or into
/// non-terminals of weight exactly zero. A vertex with positive weight is
/// never in U_t.
inline VertexSet zero_area(const Graph& g, const VertexSet& terminals, const Assignment& asg, VertexId t) {
  if (terminals.count(t) == 0) throw InputError("zero_area: " + std::to_string(t) + " is not a terminal");
  VertexSet area{t};
  std::vector<VertexId> stack{t};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (area.count(u) != 0) continue;
      if (terminals.count(u) == 0) {
        auto it = asg.find(u);
        if (it == asg.end()) throw InputError("assignment lacks vertex " + std::to_string(u));
        if (it->second.sign() < 0) throw InputError("negative weight on vertex " + std::to_string(u));
        if (!it->second.is_zero()) continue;
      }
      area.insert(u);
      stack.push_back(u);
    }
  }
  return area;
}

/// Half-integral rounding of an optimal solution: 1 on vertices bordering the
/// zero areas of two or more terminals, 1/2 on vertices bordering exactly one,
/// 0 elsewhere. Throws ConsistencyError if the result costs more than the
/// input or is infeasible, either of which means the input was not optimal.
inline Assignment round_half_integral(const Graph& g, const VertexSet& terminals, const Assignment& opt) {
  std::map<VertexId, int> bordering;
  for (VertexId t : terminals) {
    for (VertexId v : neighbors(g, zero_area(g, terminals, opt, t))) {
      if (terminals.count(v) == 0) ++bordering[v];
    }
  }
  Assignment out;
  for (VertexId v : g.vertices()) {
    if (terminals.count(v) != 0) continue;
    int c = bordering.count(v) != 0 ? bordering[v] : 0;
    out[v] = c >= 2 ? Rational(1) : c == 1 ? Rational(1, 2) : Rational(0);
  }
  if (assignment_cost(out) > assignment_cost(opt)) {
    throw ConsistencyError("half-integral rounding increased the cost; input was not optimal");
  }
  if (!is_feasible(g, terminals, DemandSet::all_pairs(terminals), out)) {
    throw ConsistencyError("half-integral rounding is infeasible; input was not optimal");
  }
  return out;
}

/// LP(I) over all terminal pairs. Throws InfeasibleError if two terminals are adjacent.
inline Rational lp_value(const Instance& inst, LpStats* stats = nullptr) {
  auto r = solve_lp(inst, {}, stats);
  if (!r) throw InfeasibleError("LP infeasible: two terminals are adjacent");
  return r->value;
}

/// pp(I) = k - LP(I)
inline Rational pp(const Instance& inst, LpStats* stats = nullptr) { return Rational(inst.k) - lp_value(inst, stats); }

}  // namespace mwcut
