#pragma once

// Brute-force reference implementations. Each one is written from the
// problem definition alone and shares no code path with the solvers it checks.

#include "mwcut/graph.hpp"
#include "mwcut/problems.hpp"
#include "mwcut/rational.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mwcut::oracle {

class LimitExceeded : public InputError {
 public:
  using InputError::InputError;
};

/// Size guards. MWCUT_ORACLE_LIMIT=<n> raises all three to n.
struct Limits {
  std::size_t deletable = 12;
  std::size_t edges = 16;
  std::size_t variables = 12;

  static Limits from_env() {
    Limits l;
    if (const char* env = std::getenv("MWCUT_ORACLE_LIMIT")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) l.deletable = l.edges = l.variables = static_cast<std::size_t>(v);
    }
    return l;
  }
};

namespace detail {

using Mask = std::uint64_t;

inline void guard(std::size_t actual, std::size_t limit, const char* what) {
  if (actual > limit) {
    throw LimitExceeded(std::string("oracle refuses input: ") + std::to_string(actual) + " " + what + " exceeds limit " +
                        std::to_string(limit));
  }
}

// Graph as adjacency bitmasks over at most 64 vertices.
struct BitGraph {
  std::vector<VertexId> ids;
  std::vector<Mask> adj;

  explicit BitGraph(const Graph& g) : ids(g.vertices()) {
    if (ids.size() > 64) throw LimitExceeded("oracle refuses graphs with more than 64 vertices");
    adj.assign(ids.size(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (VertexId u : g.neighbors(ids[i])) adj[i] |= Mask{1} << index(u);
    }
  }

  std::size_t index(VertexId v) const {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == v) return i;
    }
    throw InputError("unknown vertex " + std::to_string(v));
  }

  Mask mask_of(const VertexSet& s) const {
    Mask m = 0;
    for (VertexId v : s) m |= Mask{1} << index(v);
    return m;
  }

  // Vertices reachable from `start` inside `alive`.
  Mask flood(std::size_t start, Mask alive) const {
    Mask comp = Mask{1} << start;
    while (true) {
      Mask next = comp;
      for (Mask rest = comp; rest != 0; rest &= rest - 1) next |= adj[std::countr_zero(rest)] & alive;
      if (next == comp) return comp;
      comp = next;
    }
  }

  VertexSet to_set(Mask m) const {
    VertexSet out;
    for (; m != 0; m &= m - 1) out.insert(ids[std::countr_zero(m)]);
    return out;
  }
};

// Calls visit(subset) for subsets of `universe` (given as bit positions) in
// order of increasing size; stops early when visit returns true.
inline bool for_subsets_by_size(const std::vector<int>& universe, std::size_t max_size,
                                const std::function<bool(Mask)>& visit) {
  const std::size_t n = universe.size();
  for (std::size_t size = 0; size <= std::min(max_size, n); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Mask m = 0;
      for (std::size_t i : pick) m |= Mask{1} << universe[i];
      if (visit(m)) return true;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

}  // namespace detail

struct NmcOptimum {
  std::optional<std::size_t> size;  // nullopt when two terminals are adjacent
  VertexSet witness;
};

/// Minimum multiway cut by enumerating subsets of V \ T in order of size. Ignores k.
inline NmcOptimum brute_nmc(const Instance& inst, const Limits& limits = Limits::from_env()) {
  detail::BitGraph bg(inst.graph);
  detail::Mask terms = bg.mask_of(inst.terminals);
  std::vector<int> deletable;
  for (std::size_t i = 0; i < bg.ids.size(); ++i) {
    if (!(terms >> i & 1)) deletable.push_back(static_cast<int>(i));
  }
  detail::guard(deletable.size(), limits.deletable, "deletable vertices");
  detail::Mask all = bg.ids.size() == 64 ? ~detail::Mask{0} : (detail::Mask{1} << bg.ids.size()) - 1;

  NmcOptimum out;
  detail::for_subsets_by_size(deletable, deletable.size(), [&](detail::Mask x) {
    detail::Mask alive = all & ~x;
    for (detail::Mask rest = terms; rest != 0; rest &= rest - 1) {
      int t = std::countr_zero(rest);
      if ((bg.flood(t, alive) & terms) != (detail::Mask{1} << t)) return false;
    }
    out.size = static_cast<std::size_t>(std::popcount(x));
    out.witness = bg.to_set(x);
    return true;
  });
  return out;
}

/// YES/NO for the decision problem with budget inst.k.
inline bool brute_nmc_decide(const Instance& inst, const Limits& limits = Limits::from_env()) {
  auto opt = brute_nmc(inst, limits);
  return opt.size && static_cast<std::int64_t>(*opt.size) <= inst.k;
}

/// Fewest edges whose deletion pairwise disconnects the terminals.
inline std::size_t brute_edge_mwc(const Graph& g, const VertexSet& terminals, const Limits& limits = Limits::from_env()) {
  auto edges = g.edges();
  detail::guard(edges.size(), limits.edges, "edges");
  std::vector<int> universe(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) universe[i] = static_cast<int>(i);
  std::size_t best = edges.size();
  detail::for_subsets_by_size(universe, edges.size(), [&](detail::Mask removed) {
    Graph h;
    for (VertexId v : g.vertices()) h.add_vertex(v);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(removed >> i & 1)) h.add_edge(edges[i].first, edges[i].second);
    }
    if (!separates_terminals(h, terminals, {})) return false;
    best = static_cast<std::size_t>(std::popcount(removed));
    return true;
  });
  return best;
}

/// Minimum vertex cover size.
inline std::size_t brute_vc(const Graph& g, const Limits& limits = Limits::from_env()) {
  detail::BitGraph bg(g);
  detail::guard(bg.ids.size(), limits.deletable, "vertices");
  std::vector<int> all(bg.ids.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::size_t best = all.size();
  detail::for_subsets_by_size(all, all.size(), [&](detail::Mask cover) {
    for (std::size_t v = 0; v < bg.ids.size(); ++v) {
      if (!(cover >> v & 1) && (bg.adj[v] & ~cover) != 0) return false;
    }
    best = static_cast<std::size_t>(std::popcount(cover));
    return true;
  });
  return best;
}

inline bool literal_value(const Literal& l, std::uint64_t assignment) {
  bool v = (assignment >> (l.var - 1)) & 1;
  return l.positive ? v : !v;
}

/// Truth-table satisfiability; the reference for sat2_satisfiable.
inline bool truth_table_satisfiable(const Formula2CNF& phi, const Limits& limits = Limits::from_env()) {
  detail::guard(phi.variables, limits.variables, "variables");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << phi.variables); ++a) {
    bool ok = true;
    for (const auto& c : phi.clauses) {
      if (!literal_value(c.first, a) && !literal_value(c.second, a)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

/// 2-SAT via strongly connected components of the implication graph:
/// satisfiable iff no x shares a component with not-x.
inline bool sat2_satisfiable(const Formula2CNF& phi) {
  const int n = 2 * static_cast<int>(phi.variables);
  auto node = [](const Literal& l) { return 2 * static_cast<int>(l.var - 1) + (l.positive ? 0 : 1); };
  std::vector<std::vector<int>> implies(n);
  for (const auto& c : phi.clauses) {
    int a = node(c.first);
    int b = node(c.second);
    implies[a ^ 1].push_back(b);  // not a -> b
    implies[b ^ 1].push_back(a);  // not b -> a
  }
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  int comps = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < implies[v].size()) {
        int u = implies[v][next++];
        if (index[u] == -1) {
          index[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          call.emplace_back(u, 0);
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = comps;
          if (w == v) break;
        }
        ++comps;
      }
      int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  for (int x = 0; x < n; x += 2) {
    if (comp[x] == comp[x + 1]) return false;
  }
  return true;
}

/// Can deleting at most k clauses make phi satisfiable?
inline bool brute_asat(const Formula2CNF& phi, std::int64_t k, const Limits& limits = Limits::from_env()) {
  if (k < 0) return false;
  detail::guard(phi.clauses.size(), limits.edges, "clauses");
  std::vector<int> universe(phi.clauses.size());
  for (std::size_t i = 0; i < universe.size(); ++i) universe[i] = static_cast<int>(i);
  return detail::for_subsets_by_size(universe, static_cast<std::size_t>(k), [&](detail::Mask removed) {
    Formula2CNF rest;
    rest.variables = phi.variables;
    for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
      if (!(removed >> i & 1)) rest.clauses.push_back(phi.clauses[i]);
    }
    return sat2_satisfiable(rest);
  });
}

/// Is there a set of at most k non-terminal vertices disconnecting every pair?
inline bool brute_multicut(const MulticutInstance& inst, const Limits& limits = Limits::from_env()) {
  if (inst.k < 0) return false;
  detail::BitGraph bg(inst.graph);
  detail::Mask terms = bg.mask_of(inst.terminals());
  std::vector<int> deletable;
  for (std::size_t i = 0; i < bg.ids.size(); ++i) {
    if (!(terms >> i & 1)) deletable.push_back(static_cast<int>(i));
  }
  detail::guard(deletable.size(), limits.deletable, "deletable vertices");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [s, t] : inst.pairs.pairs) pairs.emplace_back(bg.index(s), bg.index(t));
  detail::Mask all = bg.ids.size() == 64 ? ~detail::Mask{0} : (detail::Mask{1} << bg.ids.size()) - 1;
  return detail::for_subsets_by_size(deletable, static_cast<std::size_t>(inst.k), [&](detail::Mask x) {
    for (auto [s, t] : pairs) {
      if (bg.flood(s, all & ~x) >> t & 1) return false;
    }
    return true;
  });
}

/// Does the graph have an independent set with one vertex from every part?
inline bool brute_mis(const MisInstance& mis) {
  std::vector<VertexId> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t i) {
    if (i == mis.parts.size()) return true;
    for (VertexId v : mis.parts[i]) {
      bool ok = true;
      for (VertexId u : chosen) ok = ok && !mis.graph.has_edge(u, v);
      if (!ok) continue;
      chosen.push_back(v);
      if (pick(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return pick(0);
}

struct LpOptimum {
  std::optional<Rational> value;  // nullopt when infeasible
  std::map<VertexId, Rational> assignment;
};

/// Interior vertex sets of all simple paths joining two distinct terminals
/// with no terminal inside, found by exhaustive search over (endpoint,
/// visited-set) states. An empty set means two terminals are adjacent.
inline std::set<detail::Mask> terminal_path_interiors(const Graph& g, const VertexSet& terminals) {
  detail::BitGraph bg(g);
  detail::Mask terms = bg.mask_of(terminals);
  std::set<detail::Mask> out;
  for (detail::Mask rest = terms; rest != 0; rest &= rest - 1) {
    std::size_t s = static_cast<std::size_t>(std::countr_zero(rest));
    std::set<std::pair<std::size_t, detail::Mask>> seen;
    std::vector<std::pair<std::size_t, detail::Mask>> stack;
    auto step_from = [&](std::size_t v, detail::Mask visited) {
      for (detail::Mask nb = bg.adj[v]; nb != 0; nb &= nb - 1) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(nb));
        if (u == s || (visited >> u & 1)) continue;
        if (terms >> u & 1) {
          out.insert(visited);
          continue;
        }
        auto state = std::make_pair(u, visited | detail::Mask{1} << u);
        if (seen.insert(state).second) stack.push_back(state);
      }
    };
    step_from(s, 0);
    while (!stack.empty()) {
      auto [v, visited] = stack.back();
      stack.pop_back();
      step_from(v, visited);
    }
  }
  return out;
}

/// LP(I) by exhaustive search over half-integral assignments {0, 1/2, 1}.
/// Sound as an LP oracle only because the path LP always has a half-integral
/// optimum; feasibility is checked against every terminal path interior.
inline LpOptimum brute_lp(const Instance& inst, const Limits& limits = Limits::from_env()) {
  detail::BitGraph bg(inst.graph);
  detail::Mask terms = bg.mask_of(inst.terminals);
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < bg.ids.size(); ++i) {
    if (!(terms >> i & 1)) vars.push_back(i);
  }
  detail::guard(vars.size(), limits.deletable, "non-terminal vertices");

  auto interiors = terminal_path_interiors(inst.graph, inst.terminals);
  LpOptimum out;
  if (interiors.count(0) != 0) return out;
  // Keep inclusion-minimal interiors; supersets are implied.
  std::vector<detail::Mask> minimal;
  for (detail::Mask m : interiors) {
    bool dominated = false;
    for (detail::Mask o : interiors) dominated = dominated || (o != m && (o & m) == o);
    if (!dominated) minimal.push_back(m);
  }

  // Doubled weights in {0, 1, 2}.
  std::vector<int> twice(bg.ids.size(), 0);
  std::optional<int> best;
  std::vector<int> best_twice;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    std::size_t c = code;
    int cost = 0;
    for (std::size_t v : vars) {
      twice[v] = static_cast<int>(c % 3);
      c /= 3;
      cost += twice[v];
    }
    if (best && cost >= *best) continue;
    bool feasible = true;
    for (detail::Mask m : minimal) {
      int sum = 0;
      for (detail::Mask r = m; r != 0 && sum < 2; r &= r - 1) sum += twice[std::countr_zero(r)];
      if (sum < 2) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      best = cost;
      best_twice = twice;
    }
  }
  out.value = Rational(*best, 2);
  for (std::size_t v : vars) out.assignment[bg.ids[v]] = Rational(best_twice[v], 2);
  return out;
}

}  // namespace mwcut::oracle
