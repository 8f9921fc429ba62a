#pragma once

#include "mwcut/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mwcut {

using VertexId = std::uint32_t;
using VertexSet = std::set<VertexId>;

/// Undirected simple graph over stable vertex identities.
///
/// Ids are allocated monotonically; once a vertex is removed or absorbed by a
/// contraction its id is retired and never handed out again. Mutating calls
/// exist for construction; the algorithm-level operations below are value
/// returning and leave their input untouched.
class Graph {
 public:
  Graph() = default;

  /// Allocates a fresh id above every id this graph has seen.
  VertexId add_vertex() {
    VertexId id = next_id_;
    adj_.emplace(id, VertexSet{});
    next_id_ = id + 1;
    return id;
  }

  void add_vertex(VertexId id) {
    if (id == 0) throw InputError("vertex ids are positive");
    if (adj_.count(id) != 0) throw InputError("duplicate vertex " + std::to_string(id));
    if (retired_.count(id) != 0) throw InputError("vertex id " + std::to_string(id) + " is retired");
    adj_.emplace(id, VertexSet{});
    next_id_ = std::max(next_id_, id + 1);
  }

  /// Adds uv; a repeated edge is a no-op, a self-loop is rejected.
  void add_edge(VertexId u, VertexId v) {
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    mutable_adj(u).insert(v);
    mutable_adj(v).insert(u);
  }

  void remove_edge(VertexId u, VertexId v) {
    if (!has_edge(u, v)) throw InputError("no edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u].erase(v);
    adj_[v].erase(u);
  }

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  bool has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) != 0;
  }

  const VertexSet& neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw InputError("unknown vertex " + std::to_string(v));
    return it->second;
  }

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, nb] : adj_) twice += nb.size();
    return twice / 2;
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, nb] : adj_) out.push_back(v);
    return out;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const auto& [u, nb] : adj_) {
      for (VertexId v : nb) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  VertexId next_id() const { return next_id_; }
  bool is_retired(VertexId v) const { return retired_.count(v) != 0; }

  /// In-place removal; used by the value-returning helpers below.
  void erase_vertex(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw InputError("unknown vertex " + std::to_string(v));
    for (VertexId u : it->second) adj_[u].erase(v);
    adj_.erase(it);
    retired_.insert(v);
  }

  /// In-place merge of `absorbed` into `survivor` (must be adjacent).
  void merge_into(VertexId survivor, VertexId absorbed) {
    if (!has_edge(survivor, absorbed)) {
      throw InputError("cannot contract non-edge " + std::to_string(survivor) + "-" + std::to_string(absorbed));
    }
    VertexSet moved = adj_[absorbed];
    erase_vertex(absorbed);
    for (VertexId u : moved) {
      if (u != survivor) add_edge(survivor, u);
    }
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  VertexSet& mutable_adj(VertexId v) {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw InputError("unknown vertex " + std::to_string(v));
    return it->second;
  }

  std::map<VertexId, VertexSet> adj_;
  VertexSet retired_;
  VertexId next_id_ = 1;
};

/// A Node Multiway Cut instance (G, T, k).
struct Instance {
  Graph graph;
  VertexSet terminals;
  std::int64_t k = 0;

  std::size_t terminal_count() const { return terminals.size(); }
  bool is_terminal(VertexId v) const { return terminals.count(v) != 0; }

  void validate() const {
    for (VertexId t : terminals) {
      if (!graph.has_vertex(t)) throw InputError("terminal " + std::to_string(t) + " is not a vertex");
    }
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.graph == b.graph && a.terminals == b.terminals && a.k == b.k;
  }
};

inline const VertexSet& neighbors(const Graph& g, VertexId v) { return g.neighbors(v); }

/// N[S]
inline VertexSet closed_neighbors(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (VertexId v : s) {
    const auto& nb = g.neighbors(v);
    out.insert(nb.begin(), nb.end());
  }
  return out;
}

/// N(S) = N[S] \ S
inline VertexSet neighbors(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (VertexId v : closed_neighbors(g, s)) {
    if (s.count(v) == 0) out.insert(v);
  }
  return out;
}

inline Graph remove_vertex(const Graph& g, VertexId v) {
  Graph out = g;
  out.erase_vertex(v);
  return out;
}

/// G/uv. A terminal endpoint keeps its id; between two non-terminals the
/// smaller id survives. Returns the contracted graph and the surviving id.
inline std::pair<Graph, VertexId> contract_edge_with_survivor(const Graph& g, const VertexSet& terminals,
                                                              VertexId u, VertexId v) {
  bool ut = terminals.count(u) != 0;
  bool vt = terminals.count(v) != 0;
  if (ut && vt) throw InputError("refusing to contract an edge between two terminals");
  if (!g.has_edge(u, v)) {
    throw InputError("cannot contract non-edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  VertexId survivor = ut ? u : vt ? v : std::min(u, v);
  VertexId absorbed = survivor == u ? v : u;
  Graph out = g;
  out.merge_into(survivor, absorbed);
  return {std::move(out), survivor};
}

inline Graph contract_edge(const Graph& g, const VertexSet& terminals, VertexId u, VertexId v) {
  return contract_edge_with_survivor(g, terminals, u, v).first;
}

/// Components ordered by their smallest id; each component sorted.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  VertexSet seen;
  for (VertexId root : g.vertices()) {
    if (seen.count(root) != 0) continue;
    std::vector<VertexId> comp;
    std::deque<VertexId> queue{root};
    seen.insert(root);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (VertexId u : g.neighbors(v)) {
        if (seen.insert(u).second) queue.push_back(u);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

/// True iff no two terminals share a component of G[V \ x].
inline bool separates_terminals(const Graph& g, const VertexSet& terminals, const VertexSet& x) {
  VertexSet seen;
  for (VertexId t : terminals) {
    if (seen.count(t) != 0) return false;  // reached from an earlier terminal
    std::deque<VertexId> queue{t};
    seen.insert(t);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.neighbors(v)) {
        if (x.count(u) != 0) continue;
        if (seen.insert(u).second) {
          if (terminals.count(u) != 0) return false;
          queue.push_back(u);
        }
      }
    }
  }
  return true;
}

inline bool verify_multiway_solution(const Instance& inst, const VertexSet& x) {
  for (VertexId v : x) {
    if (inst.terminals.count(v) != 0) throw InputError("solution contains terminal " + std::to_string(v));
    if (!inst.graph.has_vertex(v)) throw InputError("solution contains unknown vertex " + std::to_string(v));
  }
  if (static_cast<std::int64_t>(x.size()) > inst.k) return false;
  return separates_terminals(inst.graph, inst.terminals, x);
}

/// Dense 0..n-1 view of a Graph for the flow, LP and matching kernels.
struct IndexedGraph {
  std::vector<VertexId> ids;            // ascending
  std::vector<std::vector<int>> adj;    // ascending indices

  explicit IndexedGraph(const Graph& g) : ids(g.vertices()) {
    adj.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (VertexId u : g.neighbors(ids[i])) adj[i].push_back(index_of(u));
    }
  }

  int size() const { return static_cast<int>(ids.size()); }

  int index_of(VertexId v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) return -1;
    return static_cast<int>(it - ids.begin());
  }

  int require(VertexId v) const {
    int i = index_of(v);
    if (i < 0) throw InputError("unknown vertex " + std::to_string(v));
    return i;
  }
};

}  // namespace mwcut
