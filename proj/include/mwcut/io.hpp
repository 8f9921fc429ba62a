#pragma once

#include "mwcut/errors.hpp"
#include "mwcut/graph.hpp"
#include "mwcut/lp.hpp"
#include "mwcut/problems.hpp"

#include <charconv>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace mwcut::io {

namespace detail {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  /// Next non-blank line with `comment` lines skipped, split on whitespace.
  bool next(std::vector<std::string>& tokens, char comment = '#') {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      std::istringstream ss(line);
      tokens.clear();
      for (std::string tok; ss >> tok;) tokens.push_back(tok);
      if (tokens.empty() || tokens[0][0] == comment) continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(source_ + ":" + std::to_string(line_no_) + ": " + msg);
  }

  std::int64_t integer(const std::string& tok) const {
    std::int64_t value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail("expected an integer, got '" + tok + "'");
    return value;
  }

  VertexId vertex(const std::string& tok) const {
    std::int64_t v = integer(tok);
    if (v <= 0 || v > std::numeric_limits<VertexId>::max()) fail("vertex names are positive integers, got " + tok);
    return static_cast<VertexId>(v);
  }

  void arity(const std::vector<std::string>& tokens, std::size_t n) const {
    if (tokens.size() != n) {
      fail("'" + tokens[0] + "' takes " + std::to_string(n - 1) + " argument(s), got " +
           std::to_string(tokens.size() - 1));
    }
  }

  std::size_t line() const { return line_no_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_no_ = 0;
};

}  // namespace detail

/// Contents of a graph file. `k` and `d` lines are optional extensions.
struct GraphFile {
  Instance instance;
  bool has_k = false;
  DemandSet demands;
};

/// `p nmc <n> <m>` then `e u v`, `t v`, `k <int>`, `d u v` lines; `#` comments.
/// Vertices are 1..n.
inline GraphFile parse_graph(std::istream& in, const std::string& source = "input") {
  detail::LineReader r(in, source);
  GraphFile out;
  std::vector<std::string> tok;
  if (!r.next(tok)) r.fail("missing 'p nmc <n> <m>' header");
  if (tok[0] != "p" || tok.size() != 4 || tok[1] != "nmc") r.fail("expected 'p nmc <n> <m>' header");
  std::int64_t n = r.integer(tok[2]);
  std::int64_t m = r.integer(tok[3]);
  if (n < 0 || m < 0) r.fail("negative vertex or edge count");
  Graph& g = out.instance.graph;
  for (VertexId v = 1; v <= static_cast<VertexId>(n); ++v) g.add_vertex(v);
  auto known = [&](const std::string& s) {
    VertexId v = r.vertex(s);
    if (!g.has_vertex(v)) r.fail("vertex " + s + " exceeds n = " + std::to_string(n));
    return v;
  };
  std::int64_t edges = 0;
  while (r.next(tok)) {
    const std::string& kind = tok[0];
    if (kind == "e") {
      r.arity(tok, 3);
      VertexId u = known(tok[1]);
      VertexId v = known(tok[2]);
      if (u == v) r.fail("self-loop on vertex " + tok[1]);
      if (g.has_edge(u, v)) r.fail("duplicate edge " + tok[1] + " " + tok[2]);
      g.add_edge(u, v);
      ++edges;
    } else if (kind == "t") {
      r.arity(tok, 2);
      if (!out.instance.terminals.insert(known(tok[1])).second) r.fail("duplicate terminal " + tok[1]);
    } else if (kind == "k") {
      r.arity(tok, 2);
      if (out.has_k) r.fail("second 'k' line");
      out.instance.k = r.integer(tok[1]);
      out.has_k = true;
    } else if (kind == "d") {
      r.arity(tok, 3);
      VertexId u = known(tok[1]);
      VertexId v = known(tok[2]);
      if (u == v) r.fail("demand pair with equal endpoints");
      out.demands.pairs.emplace_back(u, v);
    } else if (kind == "p") {
      r.fail("second header");
    } else {
      r.fail("unknown line type '" + kind + "'");
    }
  }
  if (edges != m) {
    throw InputError(source + ": header declares " + std::to_string(m) + " edges, found " + std::to_string(edges));
  }
  return out;
}

/// Writes `inst` in graph format. Ids missing below the largest id come back
/// as isolated vertices when parsed.
inline void write_graph(std::ostream& out, const Instance& inst, bool with_k = true,
                        const DemandSet* demands = nullptr) {
  auto vs = inst.graph.vertices();
  VertexId n = vs.empty() ? 0 : vs.back();
  auto es = inst.graph.edges();
  out << "p nmc " << n << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << "e " << u << ' ' << v << '\n';
  for (VertexId t : inst.terminals) out << "t " << t << '\n';
  if (with_k) out << "k " << inst.k << '\n';
  if (demands) {
    for (auto [u, v] : demands->pairs) out << "d " << u << ' ' << v << '\n';
  }
}

/// `d u v` lines; `#` comments.
inline DemandSet parse_demands(std::istream& in, const std::string& source = "input") {
  detail::LineReader r(in, source);
  DemandSet out;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    if (tok[0] != "d") r.fail("expected 'd u v'");
    r.arity(tok, 3);
    VertexId u = r.vertex(tok[1]);
    VertexId v = r.vertex(tok[2]);
    if (u == v) r.fail("demand pair with equal endpoints");
    out.pairs.emplace_back(u, v);
  }
  return out;
}

inline void write_demands(std::ostream& out, const DemandSet& d) {
  for (auto [u, v] : d.pairs) out << "d " << u << ' ' << v << '\n';
}

/// `part v1 v2 ...` and `e u v` lines; `#` comments. The vertex set is the
/// union of the parts.
inline MisInstance parse_mis(std::istream& in, const std::string& source = "input") {
  detail::LineReader r(in, source);
  MisInstance out;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::size_t> edge_lines;
  std::vector<std::string> tok;
  while (r.next(tok)) {
    if (tok[0] == "part") {
      if (tok.size() < 2) r.fail("empty part");
      std::vector<VertexId> part;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        VertexId v = r.vertex(tok[i]);
        if (out.graph.has_vertex(v)) r.fail("vertex " + tok[i] + " appears in two parts");
        out.graph.add_vertex(v);
        part.push_back(v);
      }
      out.parts.push_back(std::move(part));
    } else if (tok[0] == "e") {
      r.arity(tok, 3);
      edges.emplace_back(r.vertex(tok[1]), r.vertex(tok[2]));
      edge_lines.push_back(r.line());
    } else {
      r.fail("unknown line type '" + tok[0] + "'");
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    std::string where = source + ":" + std::to_string(edge_lines[i]) + ": ";
    if (!out.graph.has_vertex(u) || !out.graph.has_vertex(v)) throw InputError(where + "edge endpoint not in any part");
    if (u == v) throw InputError(where + "self-loop");
    out.graph.add_edge(u, v);
  }
  return out;
}

inline void write_mis(std::ostream& out, const MisInstance& mis) {
  for (const auto& part : mis.parts) {
    out << "part";
    for (VertexId v : part) out << ' ' << v;
    out << '\n';
  }
  for (auto [u, v] : mis.graph.edges()) out << "e " << u << ' ' << v << '\n';
}

/// DIMACS CNF restricted to clauses of one or two literals.
inline Formula2CNF parse_cnf(std::istream& in, const std::string& source = "input") {
  detail::LineReader r(in, source);
  std::vector<std::string> tok;
  if (!r.next(tok, 'c')) r.fail("missing 'p cnf <vars> <clauses>' header");
  if (tok[0] != "p" || tok.size() != 4 || tok[1] != "cnf") r.fail("expected 'p cnf <vars> <clauses>' header");
  std::int64_t vars = r.integer(tok[2]);
  std::int64_t count = r.integer(tok[3]);
  if (vars < 0 || count < 0) r.fail("negative count in header");
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;
  while (r.next(tok, 'c')) {
    if (tok[0] == "%") break;  // end marker used by some benchmark files
    for (const auto& s : tok) {
      std::int64_t lit = r.integer(s);
      if (lit == 0) {
        if (current.empty()) r.fail("empty clause");
        if (current.size() > 2) r.fail("clause with " + std::to_string(current.size()) + " literals; at most 2 allowed");
        clauses.push_back(current);
        current.clear();
        continue;
      }
      if (lit > vars || -lit > vars) r.fail("literal " + s + " exceeds the declared " + std::to_string(vars) + " variables");
      current.push_back(static_cast<int>(lit));
      if (current.size() > 2) r.fail("clause with more than 2 literals");
    }
  }
  if (!current.empty()) throw InputError(source + ": last clause is not terminated by 0");
  if (static_cast<std::int64_t>(clauses.size()) != count) {
    throw InputError(source + ": header declares " + std::to_string(count) + " clauses, found " +
                     std::to_string(clauses.size()));
  }
  return Formula2CNF::from_dimacs(static_cast<std::uint32_t>(vars), clauses);
}

/// Unit clauses are written back in their normalized (l v l) form.
inline void write_cnf(std::ostream& out, const Formula2CNF& phi) {
  out << "p cnf " << phi.variables << ' ' << phi.clauses.size() << '\n';
  auto lit = [](const Literal& l) { return l.positive ? static_cast<std::int64_t>(l.var) : -static_cast<std::int64_t>(l.var); };
  for (const auto& c : phi.clauses) out << lit(c.first) << ' ' << lit(c.second) << " 0\n";
}

}  // namespace mwcut::io
