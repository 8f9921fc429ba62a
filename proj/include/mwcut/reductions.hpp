#pragma once

#include "mwcut/errors.hpp"
#include "mwcut/flow.hpp"
#include "mwcut/graph.hpp"
#include "mwcut/lp.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace mwcut {

/// Which rules participate. Standard also checks lpcon > k, which never fires.
enum class Mode { AboveLp, AboveCut, Standard };

inline std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::AboveLp: return "above-lp";
    case Mode::AboveCut: return "above-cut";
    case Mode::Standard: return "standard";
  }
  return "?";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  for (Mode m : {Mode::AboveLp, Mode::AboveCut, Mode::Standard}) {
    if (mode_name(m) == s) return m;
  }
  return std::nullopt;
}

enum class Step { Rule1 = 1, Rule2, Rule3, Rule4, Rule5, CutBound, Delete, Contract, Solved };

inline std::string_view step_name(Step s) {
  switch (s) {
    case Step::Rule1: return "rule1";
    case Step::Rule2: return "rule2";
    case Step::Rule3: return "rule3";
    case Step::Rule4: return "rule4";
    case Step::Rule5: return "rule5";
    case Step::CutBound: return "cutbound";
    case Step::Delete: return "delete";
    case Step::Contract: return "contract";
    case Step::Solved: return "solved";
  }
  return "?";
}

struct TraceEntry {
  Step step = Step::Rule1;
  std::vector<VertexId> vertices;
  VertexSet deleted;  // forced deletions accumulated up to and including this entry
  std::size_t depth = 0;
};

struct Trace {
  std::vector<TraceEntry> entries;

  void push(TraceEntry e) { entries.push_back(std::move(e)); }

  /// One line per entry: depth, step name, vertex ids.
  void write(std::ostream& out) const {
    for (const auto& e : entries) {
      out << e.depth << ' ' << step_name(e.step);
      for (VertexId v : e.vertices) out << ' ' << v;
      out << '\n';
    }
  }
};

/// Applies the rewriting steps of `trace` to `original`. Terminal steps
/// (rules 1 and 4) leave the instance unchanged.
inline Instance replay(const Instance& original, const Trace& trace) {
  Instance inst = original;
  for (const auto& e : trace.entries) {
    switch (e.step) {
      case Step::Rule2:
      case Step::Delete:
        inst.graph.erase_vertex(e.vertices.at(0));
        --inst.k;
        break;
      case Step::Rule3:
      case Step::Contract:
        inst.graph = contract_edge(inst.graph, inst.terminals, e.vertices.at(0), e.vertices.at(1));
        break;
      case Step::Rule5:
        for (VertexId v : e.vertices) {
          inst.graph.erase_vertex(v);
          inst.terminals.erase(v);
        }
        break;
      default:
        break;
    }
  }
  return inst;
}

enum class Verdict { NotApplicable, Continue, Yes, No };

struct ReductionOutcome {
  Verdict verdict = Verdict::NotApplicable;
  Instance instance;   // set on Continue
  TraceEntry entry;    // set unless NotApplicable
  VertexSet witness;   // rule 4's X on Yes

  bool applicable() const { return verdict != Verdict::NotApplicable; }
};

namespace detail {

/// LP(I) computed at most once per instance.
class LpCache {
 public:
  LpCache(const Instance& inst, LpStats* stats) : inst_(inst), stats_(stats) {}

  const LPResult& get() {
    if (!lp_) {
      auto r = solve_lp(inst_, {}, stats_);
      if (!r) throw InfeasibleError("LP infeasible: two terminals are adjacent");
      lp_ = std::move(*r);
    }
    return *lp_;
  }
  Rational pp() { return Rational(inst_.k) - get().value; }
  LpStats* stats() const { return stats_; }

 private:
  const Instance& inst_;
  LpStats* stats_;
  std::optional<LPResult> lp_;
};

inline std::optional<std::pair<VertexId, VertexId>> adjacent_terminals(const Instance& inst) {
  for (VertexId t : inst.terminals) {
    for (VertexId u : inst.graph.neighbors(t)) {
      if (inst.is_terminal(u)) return std::pair{t, u};
    }
  }
  return std::nullopt;
}

inline ReductionOutcome no(Step step, std::vector<VertexId> vertices = {}) {
  ReductionOutcome out;
  out.verdict = Verdict::No;
  out.entry.step = step;
  out.entry.vertices = std::move(vertices);
  return out;
}

inline ReductionOutcome rule1(const Instance& inst, LpCache& lp) {
  if (auto pair = adjacent_terminals(inst)) return no(Step::Rule1, {pair->first, pair->second});
  if (lp.pp().sign() < 0) return no(Step::Rule1);
  return {};
}

inline ReductionOutcome rule3(const Instance& inst, LpCache& lp) {
  const LPResult& base = lp.get();
  for (VertexId t : inst.terminals) {
    for (VertexId w : inst.graph.neighbors(t)) {
      if (inst.is_terminal(w)) continue;
      // An optimum with d_w = 0 already satisfies the pin.
      bool fires = base.assignment.at(w).is_zero();
      if (!fires) {
        auto pinned = solve_lp(inst, {w}, lp.stats());
        fires = pinned && pinned->value == base.value;
      }
      if (!fires) continue;
      ReductionOutcome out;
      out.verdict = Verdict::Continue;
      out.instance = inst;
      out.instance.graph = contract_edge(inst.graph, inst.terminals, t, w);
      out.entry.step = Step::Rule3;
      out.entry.vertices = {t, w};
      return out;
    }
  }
  return {};
}

inline ReductionOutcome rule4(const Instance& inst, LpCache& lp) {
  const auto s = static_cast<std::int64_t>(inst.terminals.size());
  if (s < 2) return {};
  auto [t0, m] = max_isolating_cut(inst);
  Rational con(inst.k - m);
  bool by_ratio = Rational(s - 1) * con >= Rational(s - 2) * Rational(inst.k);
  bool by_pp = con <= Rational(2) * lp.pp();
  if (!by_ratio && !by_pp) return {};
  VertexSet others = inst.terminals;
  others.erase(t0);
  VertexSet x;
  for (VertexId v : neighbors(inst.graph, others)) {
    if (!inst.is_terminal(v)) x.insert(v);
  }
  if (!verify_multiway_solution(inst, x)) {
    throw ConsistencyError("rule 4 witness N(T - t" + std::to_string(t0) + ") does not verify");
  }
  ReductionOutcome out;
  out.verdict = Verdict::Yes;
  out.entry.step = Step::Rule4;
  out.entry.vertices = {t0};
  out.witness = std::move(x);
  return out;
}

inline std::int64_t lpcon_from(const Instance& inst) { return inst.k - max_isolating_cut(inst).second; }

}  // namespace detail

/// NO if two terminals are adjacent or pp < 0.
inline ReductionOutcome rule1(const Instance& inst, LpStats* stats = nullptr) {
  detail::LpCache lp(inst, stats);
  return detail::rule1(inst, lp);
}

/// Deletes the first non-terminal (terminals and neighbours in id order)
/// adjacent to two or more terminals, k - 1.
inline ReductionOutcome rule2(const Instance& inst) {
  for (VertexId t : inst.terminals) {
    for (VertexId w : inst.graph.neighbors(t)) {
      if (inst.is_terminal(w)) continue;
      int hits = 0;
      for (VertexId u : inst.graph.neighbors(w)) hits += inst.is_terminal(u);
      if (hits < 2) continue;
      ReductionOutcome out;
      out.verdict = Verdict::Continue;
      out.instance = inst;
      out.instance.graph.erase_vertex(w);
      --out.instance.k;
      out.entry.step = Step::Rule2;
      out.entry.vertices = {w};
      return out;
    }
  }
  return {};
}

/// Contracts the first terminal edge tw whose pin d_w = 0 keeps LP(I).
inline ReductionOutcome rule3(const Instance& inst, LpStats* stats = nullptr) {
  detail::LpCache lp(inst, stats);
  return detail::rule3(inst, lp);
}

/// YES with X = N(T - t0) when lpcon >= (s-2)/(s-1) k or lpcon <= 2 pp.
inline ReductionOutcome rule4(const Instance& inst, LpStats* stats = nullptr) {
  detail::LpCache lp(inst, stats);
  return detail::rule4(inst, lp);
}

/// Removes every component holding at most one terminal.
inline ReductionOutcome rule5(const Instance& inst) {
  std::vector<VertexId> doomed;
  for (const auto& comp : connected_components(inst.graph)) {
    std::size_t terms = 0;
    for (VertexId v : comp) terms += inst.is_terminal(v);
    if (terms <= 1) doomed.insert(doomed.end(), comp.begin(), comp.end());
  }
  if (doomed.empty()) return {};
  std::sort(doomed.begin(), doomed.end());
  ReductionOutcome out;
  out.verdict = Verdict::Continue;
  out.instance = inst;
  for (VertexId v : doomed) {
    out.instance.graph.erase_vertex(v);
    out.instance.terminals.erase(v);
  }
  out.entry.step = Step::Rule5;
  out.entry.vertices = std::move(doomed);
  return out;
}

/// Fixpoint structure check: 1/2 on N(T) is an optimal LP solution and every
/// terminal's neighbourhood is a minimum isolating cut.
inline bool check_lemma3(const Instance& inst, const Rational& lp, LpStats* = nullptr) {
  VertexSet border;
  for (VertexId v : neighbors(inst.graph, inst.terminals)) {
    if (!inst.is_terminal(v)) border.insert(v);
  }
  Assignment half;
  for (VertexId v : inst.graph.vertices()) {
    if (!inst.is_terminal(v)) half[v] = border.count(v) != 0 ? Rational(1, 2) : Rational(0);
  }
  if (assignment_cost(half) != lp) return false;
  if (!is_feasible(inst.graph, inst.terminals, DemandSet::all_pairs(inst.terminals), half)) return false;
  for (VertexId t : inst.terminals) {
    if (isolating_cut_size(inst, t) != static_cast<std::int64_t>(inst.graph.neighbors(t).size())) return false;
  }
  return true;
}

inline bool check_lemma3(const Instance& inst, LpStats* stats = nullptr) {
  return check_lemma3(inst, lp_value(inst, stats), stats);
}

struct TerminalBound {
  std::size_t terminals = 0;
  std::int64_t twice_k = 0;
  bool holds = false;
};

inline TerminalBound terminal_bound_stats(const Instance& inst) {
  TerminalBound b;
  b.terminals = inst.terminals.size();
  b.twice_k = 2 * inst.k;
  b.holds = static_cast<std::int64_t>(b.terminals) <= b.twice_k;
  return b;
}

struct ReduceOptions {
  Mode mode = Mode::AboveLp;
  bool check_invariants = false;  // recompute pp around rules 2 and 3
  LpStats* stats = nullptr;
  std::size_t* fixpoints = nullptr;  // incremented per checked irreducible fixpoint
};

struct ReductionResult {
  Verdict verdict = Verdict::Continue;  // Continue means irreducible
  Instance instance;
  Trace trace;
  VertexSet deleted;  // forced deletions (rule 2)
  VertexSet witness;  // on Yes: deleted plus rule 4's X
};

/// Applies the lowest-numbered applicable rule until none applies or a
/// verdict is reached. At an irreducible fixpoint, checks the half-integral
/// structure and |T| <= 2k, throwing ConsistencyError on failure.
inline ReductionResult reduce_exhaustively(const Instance& start, const ReduceOptions& opt = {},
                                           std::size_t depth = 0) {
  ReductionResult res;
  res.instance = start;
  auto record = [&](ReductionOutcome& o) {
    o.entry.deleted = res.deleted;
    o.entry.depth = depth;
    res.trace.push(o.entry);
  };
  while (true) {
    const Instance& inst = res.instance;
    detail::LpCache lp(inst, opt.stats);
    ReductionOutcome o = detail::rule1(inst, lp);
    if (!o.applicable() && opt.mode == Mode::Standard && inst.terminals.size() >= 2 &&
        detail::lpcon_from(inst) > inst.k) {
      o = detail::no(Step::CutBound);
    }
    if (!o.applicable()) o = rule2(inst);
    if (!o.applicable()) o = detail::rule3(inst, lp);
    if (!o.applicable() && opt.mode != Mode::AboveLp) o = detail::rule4(inst, lp);
    if (!o.applicable()) o = rule5(inst);

    if (!o.applicable()) {
      if (!check_lemma3(inst, lp.get().value)) {
        throw ConsistencyError("irreducible instance violates the half-integral neighbourhood structure");
      }
      if (!terminal_bound_stats(inst).holds) throw ConsistencyError("irreducible instance has |T| > 2k");
      if (opt.fixpoints) ++*opt.fixpoints;
      return res;
    }
    if (o.entry.step == Step::Rule2) res.deleted.insert(o.entry.vertices[0]);
    record(o);
    if (o.verdict == Verdict::No) {
      res.verdict = Verdict::No;
      return res;
    }
    if (o.verdict == Verdict::Yes) {
      res.verdict = Verdict::Yes;
      res.witness = res.deleted;
      res.witness.insert(o.witness.begin(), o.witness.end());
      return res;
    }
    if (opt.check_invariants && (o.entry.step == Step::Rule2 || o.entry.step == Step::Rule3)) {
      Rational before = lp.pp();
      Rational after = pp(o.instance, opt.stats);
      if (o.entry.step == Step::Rule2 && after > before) throw ConsistencyError("rule 2 increased pp");
      if (o.entry.step == Step::Rule3 && after != before) throw ConsistencyError("rule 3 changed pp");
    }
    res.instance = std::move(o.instance);
  }
}

}  // namespace mwcut
