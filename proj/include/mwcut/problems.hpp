#pragma once

#include "mwcut/graph.hpp"
#include "mwcut/lp.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace mwcut {

struct Literal {
  std::uint32_t var = 0;  // 1-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// A clause of exactly two (possibly equal) literals.
struct Clause {
  Literal first;
  Literal second;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// 2-CNF over variables 1..variables. Duplicate clauses are kept.
struct Formula2CNF {
  std::uint32_t variables = 0;
  std::vector<Clause> clauses;

  /// From DIMACS-style signed literals. A unit clause (l) becomes (l v l);
  /// clauses with zero or more than two literals are rejected.
  static Formula2CNF from_dimacs(std::uint32_t variables, const std::vector<std::vector<int>>& clauses) {
    Formula2CNF phi;
    phi.variables = variables;
    for (const auto& c : clauses) {
      if (c.empty() || c.size() > 2) {
        throw InputError("clause with " + std::to_string(c.size()) + " literals; only 1 or 2 are supported");
      }
      auto lit = [&](int x) {
        if (x == 0) throw InputError("literal 0 inside a clause");
        auto var = static_cast<std::uint32_t>(std::abs(x));
        if (var > variables) throw InputError("literal " + std::to_string(x) + " exceeds the declared variable count");
        return Literal{var, x > 0};
      };
      Literal a = lit(c[0]);
      Literal b = c.size() == 2 ? lit(c[1]) : a;
      phi.clauses.push_back({a, b});
    }
    return phi;
  }

  /// n(x): occurrences of variable x, counting (l v l) twice.
  std::size_t occurrences(std::uint32_t var) const {
    std::size_t n = 0;
    for (const auto& c : clauses) n += (c.first.var == var) + (c.second.var == var);
    return n;
  }
};

/// Vertex cover of size at most mu(G) + k?
struct VcAmmInstance {
  Graph graph;
  std::int64_t k = 0;
};

/// Node multicut: delete at most k non-terminal vertices so every pair is disconnected.
/// Terminals are the vertices named in `pairs`.
struct MulticutInstance {
  Graph graph;
  DemandSet pairs;
  std::int64_t k = 0;

  VertexSet terminals() const { return pairs.endpoints(); }
};

/// Multicoloured independent set: one vertex from each clique part, pairwise non-adjacent.
struct MisInstance {
  Graph graph;
  std::vector<std::vector<VertexId>> parts;

  void validate() const {
    VertexSet covered;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto& part = parts[i];
      if (part.size() < 2) throw InputError("part " + std::to_string(i + 1) + " has fewer than two vertices");
      for (VertexId v : part) {
        if (!graph.has_vertex(v)) throw InputError("part vertex " + std::to_string(v) + " is not in the graph");
        if (!covered.insert(v).second) throw InputError("vertex " + std::to_string(v) + " is in two parts");
      }
      for (std::size_t a = 0; a < part.size(); ++a) {
        for (std::size_t b = a + 1; b < part.size(); ++b) {
          if (!graph.has_edge(part[a], part[b])) {
            throw InputError("part " + std::to_string(i + 1) + " is not a clique: missing edge " +
                             std::to_string(part[a]) + "-" + std::to_string(part[b]));
          }
        }
      }
    }
    if (covered.size() != graph.vertex_count()) throw InputError("parts do not cover every vertex");
  }
};

}  // namespace mwcut
