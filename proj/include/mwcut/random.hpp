#pragma once

#include "mwcut/graph.hpp"
#include "mwcut/problems.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace mwcut {

/// Seeded source with portable draws: std::mt19937_64 output is fixed by the
/// standard, the distribution adaptors are not, so bounded draws are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomInstanceParams {
  std::size_t vertices = 8;
  std::size_t terminals = 3;
  // Edge probability as a fraction.
  std::uint64_t edge_num = 1;
  std::uint64_t edge_den = 3;
  std::int64_t k = 2;
  bool connected = false;
  // Keep terminals pairwise non-adjacent.
  bool separate_terminals = false;
};

/// G(n, p) on vertices 1..n with terminals drawn uniformly. With `connected`,
/// a random spanning tree is laid down first.
inline Instance random_instance(const RandomInstanceParams& p, Rng& rng) {
  Instance inst;
  for (std::size_t v = 1; v <= p.vertices; ++v) inst.graph.add_vertex(static_cast<VertexId>(v));
  std::vector<VertexId> order(p.vertices);
  for (std::size_t i = 0; i < p.vertices; ++i) order[i] = static_cast<VertexId>(i + 1);
  rng.shuffle(order);
  std::size_t terminal_count = std::min(p.terminals, p.vertices);
  for (std::size_t i = 0; i < terminal_count; ++i) inst.terminals.insert(order[i]);

  auto allowed = [&](VertexId u, VertexId v) {
    return !(p.separate_terminals && inst.is_terminal(u) && inst.is_terminal(v));
  };
  if (p.connected && p.vertices > 1) {
    // Attach each vertex to an earlier one; non-terminals first so terminals can hang off them.
    std::vector<VertexId> seq = order;
    std::stable_partition(seq.begin(), seq.end(), [&](VertexId v) { return !inst.is_terminal(v); });
    for (std::size_t i = 1; i < seq.size(); ++i) {
      std::vector<VertexId> options;
      for (std::size_t j = 0; j < i; ++j) {
        if (allowed(seq[i], seq[j])) options.push_back(seq[j]);
      }
      if (!options.empty()) inst.graph.add_edge(seq[i], options[rng.below(options.size())]);
    }
  }
  for (VertexId u = 1; u <= p.vertices; ++u) {
    for (VertexId v = u + 1; v <= p.vertices; ++v) {
      if (allowed(u, v) && rng.chance(p.edge_num, p.edge_den)) inst.graph.add_edge(u, v);
    }
  }
  inst.k = p.k;
  return inst;
}

/// Random 2-CNF; each clause has one or two literals (unit clauses doubled).
inline Formula2CNF random_formula(std::uint32_t variables, std::size_t clauses, Rng& rng) {
  std::vector<std::vector<int>> raw;
  for (std::size_t c = 0; c < clauses; ++c) {
    std::size_t width = rng.chance(1, 5) ? 1 : 2;
    std::vector<int> clause;
    for (std::size_t i = 0; i < width; ++i) {
      int var = static_cast<int>(rng.between(1, variables));
      clause.push_back(rng.chance(1, 2) ? var : -var);
    }
    raw.push_back(clause);
  }
  return Formula2CNF::from_dimacs(variables, raw);
}

/// Random multicoloured independent set input: `parts` cliques of 2..max_part
/// vertices, cross edges with probability num/den.
inline MisInstance random_mis(std::size_t parts, std::size_t max_part, std::uint64_t num, std::uint64_t den, Rng& rng) {
  MisInstance mis;
  VertexId next = 1;
  for (std::size_t i = 0; i < parts; ++i) {
    std::size_t size = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(std::max<std::size_t>(2, max_part))));
    std::vector<VertexId> part;
    for (std::size_t j = 0; j < size; ++j) {
      mis.graph.add_vertex(next);
      part.push_back(next++);
    }
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) mis.graph.add_edge(part[a], part[b]);
    }
    mis.parts.push_back(part);
  }
  for (std::size_t i = 0; i < mis.parts.size(); ++i) {
    for (std::size_t j = i + 1; j < mis.parts.size(); ++j) {
      for (VertexId u : mis.parts[i]) {
        for (VertexId v : mis.parts[j]) {
          if (rng.chance(num, den)) mis.graph.add_edge(u, v);
        }
      }
    }
  }
  return mis;
}

}  // namespace mwcut
