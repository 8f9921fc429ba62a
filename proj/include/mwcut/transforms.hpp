#pragma once

#include "mwcut/errors.hpp"
#include "mwcut/graph.hpp"
#include "mwcut/lp.hpp"
#include "mwcut/matching.hpp"
#include "mwcut/problems.hpp"
#include "mwcut/solver.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace mwcut {

// ---------------------------------------------------------------------------
// Vertex cover above maximum matching

struct VcAmmImage {
  Instance instance;
  std::size_t matching = 0;                 // mu(G)
  std::map<VertexId, VertexId> terminal_of;  // v -> t_v
};

/// A pendant terminal t_v on every vertex v, budget mu(G) + k.
inline VcAmmImage vcamm_to_nmc(const VcAmmInstance& in) {
  VcAmmImage img;
  img.matching = max_matching_size(in.graph);
  img.instance.graph = in.graph;
  for (VertexId v : in.graph.vertices()) {
    VertexId t = img.instance.graph.add_vertex();
    img.instance.graph.add_edge(v, t);
    img.instance.terminals.insert(t);
    img.terminal_of[v] = t;
  }
  img.instance.k = static_cast<std::int64_t>(img.matching) + in.k;
  return img;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& cover) {
  for (auto [u, v] : g.edges()) {
    if (cover.count(u) == 0 && cover.count(v) == 0) return false;
  }
  return true;
}

struct VcAmmResult {
  bool yes = false;
  VertexSet cover;
  std::size_t matching = 0;
  SolveResult nmc;
};

inline VcAmmResult solve_vcamm(const VcAmmInstance& in, const SolverOptions& opt = {}) {
  VcAmmImage img = vcamm_to_nmc(in);
  VcAmmResult res;
  res.matching = img.matching;
  res.nmc = solve(img.instance, opt);
  res.yes = res.nmc.yes;
  if (res.yes) {
    res.cover = res.nmc.witness;
    if (!is_vertex_cover(in.graph, res.cover)) throw ConsistencyError("multiway cut does not map to a vertex cover");
    if (static_cast<std::int64_t>(res.cover.size()) > img.instance.k) {
      throw ConsistencyError("mapped vertex cover exceeds mu(G) + k");
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Almost 2-SAT

struct AsatImage {
  VcAmmInstance vcamm;
  // (variable, polarity, occurrence index 1..n(x)) -> vertex
  std::map<std::tuple<std::uint32_t, bool, std::size_t>, VertexId> vertex_of;
  std::vector<std::pair<VertexId, VertexId>> clause_edges;  // one per clause, in clause order
  std::size_t matching = 0;                                 // sum of n(x)
};

/// Occurrences are numbered clause by clause, left literal before right.
/// Vertex ids: per variable in order, v(x,1..n(x)) then v(-x,1..n(x)).
inline AsatImage asat_to_vcamm(const Formula2CNF& phi, std::int64_t k = 0) {
  AsatImage img;
  img.vcamm.k = k;
  Graph& g = img.vcamm.graph;
  for (std::uint32_t x = 1; x <= phi.variables; ++x) {
    std::size_t n = phi.occurrences(x);
    img.matching += n;
    for (bool positive : {true, false}) {
      for (std::size_t i = 1; i <= n; ++i) img.vertex_of[{x, positive, i}] = g.add_vertex();
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) g.add_edge(img.vertex_of[{x, true, i}], img.vertex_of[{x, false, j}]);
    }
  }
  std::map<std::uint32_t, std::size_t> seen;
  for (const Clause& c : phi.clauses) {
    VertexId a = img.vertex_of.at({c.first.var, c.first.positive, ++seen[c.first.var]});
    VertexId b = img.vertex_of.at({c.second.var, c.second.positive, ++seen[c.second.var]});
    g.add_edge(a, b);  // for (x v -x) this edge is already in the bipartite part
    img.clause_edges.emplace_back(a, b);
  }
  return img;
}

inline bool literal_true(const Literal& l, const std::vector<bool>& assignment) {
  return assignment.at(l.var) == l.positive;
}

struct AsatResult {
  bool yes = false;
  std::vector<bool> assignment;        // index 1..variables
  std::vector<std::size_t> violated;   // clause indices (0-based) left unsatisfied
  VcAmmResult vcamm;
};

/// Can deleting at most k clauses make phi satisfiable? On YES, returns an
/// assignment and the clauses it violates.
inline AsatResult solve_asat(const Formula2CNF& phi, std::int64_t k, const SolverOptions& opt = {}) {
  AsatImage img = asat_to_vcamm(phi, k);
  AsatResult res;
  res.vcamm = solve_vcamm(img.vcamm, opt);
  res.yes = res.vcamm.yes;
  if (!res.yes) return res;
  const VertexSet& cover = res.vcamm.cover;
  res.assignment.assign(phi.variables + 1, true);
  for (std::uint32_t x = 1; x <= phi.variables; ++x) {
    std::size_t n = phi.occurrences(x);
    bool all_positive = true;
    for (std::size_t i = 1; i <= n; ++i) all_positive = all_positive && cover.count(img.vertex_of.at({x, true, i}));
    res.assignment[x] = all_positive;  // both sides covered, or no occurrences: true
  }
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const Clause& cl = phi.clauses[c];
    if (!literal_true(cl.first, res.assignment) && !literal_true(cl.second, res.assignment)) res.violated.push_back(c);
  }
  if (static_cast<std::int64_t>(res.violated.size()) > k) {
    throw ConsistencyError("vertex cover maps to an assignment violating more than k clauses");
  }
  return res;
}

// ---------------------------------------------------------------------------
// Edge multiway cut through the line graph

struct EdgeImage {
  Instance instance;
  std::map<VertexId, std::pair<VertexId, VertexId>> edge_of;  // line vertex -> original edge
  std::map<VertexId, VertexId> anchor_of;                      // terminal -> its anchor line vertex
};

/// Hangs a pendant anchor edge off every terminal and takes the line graph of
/// the result. Anchor edges become the terminals; original edges stay deletable.
inline EdgeImage edge_mwc_to_node_mwc(const Graph& g, const VertexSet& terminals, std::int64_t k) {
  for (VertexId t : terminals) {
    if (!g.has_vertex(t)) throw InputError("terminal " + std::to_string(t) + " is not a vertex");
  }
  Graph aug = g;
  std::map<std::pair<VertexId, VertexId>, VertexId> anchors;
  for (VertexId t : terminals) {
    VertexId a = aug.add_vertex();
    aug.add_edge(t, a);
    anchors[{t, a}] = t;
  }
  EdgeImage img;
  std::map<VertexId, std::vector<VertexId>> incident;
  for (auto e : aug.edges()) {
    VertexId lv = img.instance.graph.add_vertex();
    incident[e.first].push_back(lv);
    incident[e.second].push_back(lv);
    if (auto it = anchors.find(e); it != anchors.end()) {
      img.instance.terminals.insert(lv);
      img.anchor_of[it->second] = lv;
    } else {
      img.edge_of[lv] = e;
    }
  }
  for (const auto& [v, lvs] : incident) {
    for (std::size_t i = 0; i < lvs.size(); ++i) {
      for (std::size_t j = i + 1; j < lvs.size(); ++j) img.instance.graph.add_edge(lvs[i], lvs[j]);
    }
  }
  img.instance.k = k;
  return img;
}

struct EdgeMwcResult {
  bool yes = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  SolveResult nmc;
};

inline EdgeMwcResult solve_edge_mwc(const Graph& g, const VertexSet& terminals, std::int64_t k,
                                    const SolverOptions& opt = {}) {
  EdgeImage img = edge_mwc_to_node_mwc(g, terminals, k);
  EdgeMwcResult res;
  res.nmc = solve(img.instance, opt);
  res.yes = res.nmc.yes;
  if (!res.yes) return res;
  Graph rest = g;
  for (VertexId lv : res.nmc.witness) {
    auto e = img.edge_of.at(lv);
    res.edges.push_back(e);
    rest.remove_edge(e.first, e.second);
  }
  if (!separates_terminals(rest, terminals, {})) throw ConsistencyError("mapped edge set does not separate terminals");
  return res;
}

// ---------------------------------------------------------------------------
// Multicut hardness gadget

struct MulticutGadget {
  MulticutInstance instance;
  std::map<VertexId, VertexId> prime, t, s, s_prime;
  std::vector<VertexId> a, b;  // per part
};

/// Builds the node multicut instance with budget n = |V| and LP = n from a
/// multicoloured independent set instance. Each path P_i visits the primes of
/// V_i in ascending id order; a_i hangs off its first vertex, b_i off its last.
inline MulticutGadget gen_multicut_gadget(const MisInstance& mis) {
  mis.validate();
  MulticutGadget gad;
  Graph& g = gad.instance.graph;
  g = mis.graph;
  auto vs = mis.graph.vertices();
  for (VertexId v : vs) {
    gad.prime[v] = g.add_vertex();
    g.add_edge(v, gad.prime[v]);
  }
  for (auto part : mis.parts) {
    std::sort(part.begin(), part.end());
    for (std::size_t i = 0; i + 1 < part.size(); ++i) g.add_edge(gad.prime[part[i]], gad.prime[part[i + 1]]);
  }
  auto pendant = [&](VertexId v) {
    VertexId x = g.add_vertex();
    g.add_edge(v, x);
    return x;
  };
  auto& pairs = gad.instance.pairs.pairs;
  for (VertexId v : vs) gad.t[v] = pendant(v);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(gad.t[vs[i]], gad.t[vs[j]]);
  }
  for (VertexId v : vs) {
    gad.s[v] = pendant(v);
    gad.s_prime[v] = pendant(gad.prime[v]);
    pairs.emplace_back(gad.s[v], gad.s_prime[v]);
  }
  for (auto part : mis.parts) {
    std::sort(part.begin(), part.end());
    gad.a.push_back(pendant(gad.prime[part.front()]));
    gad.b.push_back(pendant(gad.prime[part.back()]));
    pairs.emplace_back(gad.a.back(), gad.b.back());
  }
  gad.instance.k = static_cast<std::int64_t>(vs.size());

  auto lp = solve_lp(g, gad.instance.terminals(), gad.instance.pairs);
  if (!lp || lp->value != Rational(gad.instance.k)) {
    throw ConsistencyError("generated gadget does not have LP = n");
  }
  return gad;
}

}  // namespace mwcut
