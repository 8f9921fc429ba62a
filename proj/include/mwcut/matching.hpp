#pragma once

#include "mwcut/graph.hpp"

#include <numeric>
#include <queue>
#include <vector>

namespace mwcut {

namespace detail {

// Edmonds' blossom algorithm, O(V^3): augment from every exposed vertex,
// shrinking odd cycles by relabelling their base.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const std::vector<std::vector<int>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  std::vector<int> run() {
    // Greedy start cuts the number of augmenting searches.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int u : adj_[v]) {
        if (match_[u] == -1) {
          match_[u] = v;
          match_[v] = u;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        int pv = parent_[end];
        int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace detail

/// Maximum matching of a general graph as (u, v) pairs with u < v.
inline std::vector<std::pair<VertexId, VertexId>> max_matching(const Graph& g) {
  IndexedGraph ig(g);
  auto mate = detail::BlossomMatcher(ig.adj).run();
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int v = 0; v < ig.size(); ++v) {
    if (mate[v] > v) out.emplace_back(ig.ids[v], ig.ids[mate[v]]);
  }
  return out;
}

/// mu(G)
inline std::size_t max_matching_size(const Graph& g) { return max_matching(g).size(); }

}  // namespace mwcut
