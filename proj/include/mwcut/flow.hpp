#pragma once

#include "mwcut/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace mwcut {

/// A minimum vertex cut. `size == cut.size()` and equals the max-flow value.
struct CutResult {
  std::int64_t size = 0;
  VertexSet cut;
};

namespace detail {

// Dinic's blocking-flow max flow on an explicit arc list.
class Dinic {
 public:
  explicit Dinic(int nodes) : head_(nodes, -1), level_(nodes), iter_(nodes) {}

  void add_arc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t, std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow < limit && build_levels(s, t)) {
      std::copy(head_.begin(), head_.end(), iter_.begin());
      while (flow < limit) {
        std::int64_t pushed = push(s, t, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  /// Nodes reachable from s in the residual graph.
  std::vector<bool> residual_reach(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          q.push(arcs_[a].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool build_levels(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[v] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t push(int v, int t, std::int64_t f) {
    if (v == t) return f;
    for (int& a = iter_[v]; a != -1; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      std::int64_t d = push(arc.to, t, std::min(f, arc.cap));
      if (d > 0) {
        arc.cap -= d;
        arcs_[a ^ 1].cap += d;
        return d;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_, level_, iter_;
};

}  // namespace detail

/// Minimum set of deletable vertices separating `sources` from `sinks`.
/// Vertices in `undeletable` cannot be cut. Returns nullopt when no finite
/// cut exists, i.e. some source reaches some sink through undeletable vertices only.
inline std::optional<CutResult> min_vertex_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                               const VertexSet& undeletable) {
  if (sources.empty() || sinks.empty()) throw InputError("min_vertex_cut: empty source or sink set");
  for (VertexId s : sources) {
    if (sinks.count(s) != 0) throw InputError("min_vertex_cut: vertex " + std::to_string(s) + " is both source and sink");
    if (undeletable.count(s) == 0) throw InputError("min_vertex_cut: sources must be undeletable");
  }
  for (VertexId t : sinks) {
    if (undeletable.count(t) == 0) throw InputError("min_vertex_cut: sinks must be undeletable");
  }

  IndexedGraph ig(g);
  const int n = ig.size();
  const int super_source = 2 * n;
  const int super_sink = 2 * n + 1;
  // Any finite cut has at most n vertices.
  const std::int64_t inf = static_cast<std::int64_t>(n) + 1;

  std::vector<bool> deletable(n, true);
  for (VertexId v : undeletable) {
    int i = ig.index_of(v);
    if (i >= 0) deletable[i] = false;
  }

  detail::Dinic flow(2 * n + 2);
  // Vertex i splits into in-node 2i and out-node 2i+1.
  for (int i = 0; i < n; ++i) {
    flow.add_arc(2 * i, 2 * i + 1, deletable[i] ? 1 : inf);
    for (int j : ig.adj[i]) flow.add_arc(2 * i + 1, 2 * j, inf);
  }
  for (VertexId s : sources) flow.add_arc(super_source, 2 * ig.require(s), inf);
  for (VertexId t : sinks) flow.add_arc(2 * ig.require(t) + 1, super_sink, inf);

  std::int64_t value = flow.max_flow(super_source, super_sink, inf);
  if (value >= inf) return std::nullopt;

  auto reach = flow.residual_reach(super_source);
  CutResult result;
  result.size = value;
  for (int i = 0; i < n; ++i) {
    if (deletable[i] && reach[2 * i] && !reach[2 * i + 1]) result.cut.insert(ig.ids[i]);
  }
  if (static_cast<std::int64_t>(result.cut.size()) != value) {
    throw ConsistencyError("min_vertex_cut: extracted cut size differs from flow value");
  }
  return result;
}

/// A minimum isolating cut of terminal t.
inline CutResult isolating_cut(const Instance& inst, VertexId t) {
  if (!inst.is_terminal(t)) throw InputError("vertex " + std::to_string(t) + " is not a terminal");
  VertexSet sinks = inst.terminals;
  sinks.erase(t);
  if (sinks.empty()) return {};
  auto cut = min_vertex_cut(inst.graph, {t}, sinks, inst.terminals);
  if (!cut) throw InfeasibleError("terminal " + std::to_string(t) + " is adjacent to another terminal");
  return *cut;
}

/// m(I, t)
inline std::int64_t isolating_cut_size(const Instance& inst, VertexId t) { return isolating_cut(inst, t).size; }

/// The terminal maximising m(I, t) (smallest id on ties) and that maximum.
inline std::pair<VertexId, std::int64_t> max_isolating_cut(const Instance& inst) {
  if (inst.terminals.empty()) throw InputError("instance has no terminals");
  VertexId best = *inst.terminals.begin();
  std::int64_t best_size = -1;
  for (VertexId t : inst.terminals) {
    std::int64_t m = isolating_cut_size(inst, t);
    if (m > best_size) {
      best = t;
      best_size = m;
    }
  }
  return {best, best_size};
}

/// lpcon(I) = k - max_t m(I, t)
inline std::int64_t lpcon(const Instance& inst) {
  if (inst.terminals.size() < 2) throw InputError("lpcon needs at least two terminals");
  return inst.k - max_isolating_cut(inst).second;
}

}  // namespace mwcut
