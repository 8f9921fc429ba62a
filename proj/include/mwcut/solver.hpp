#pragma once

#include "mwcut/errors.hpp"
#include "mwcut/graph.hpp"
#include "mwcut/lp.hpp"
#include "mwcut/reductions.hpp"

#include <chrono>
#include <optional>
#include <utility>

namespace mwcut {

enum class BranchPolicy { SmallestId, MaxDegree };

struct SolverOptions {
  Mode mode = Mode::AboveLp;
  BranchPolicy policy = BranchPolicy::SmallestId;
  bool check_invariants = false;  // measure drop at every branch, pp bookkeeping in the rules
  Trace* trace = nullptr;
};

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
  std::size_t fixpoints = 0;  // irreducible instances whose structure was checked
  LpStats lp;
  double seconds = 0;
  std::optional<Rational> root_pp;  // absent when two terminals are adjacent
  std::optional<std::uint64_t> node_bound;
};

struct SolveResult {
  bool yes = false;
  VertexSet witness;
  SolveStats stats;
};

/// The terminal and neighbour to branch on, or nullopt if no terminal has a
/// non-terminal neighbour. SmallestId: smallest terminal, then smallest
/// neighbour. MaxDegree: the neighbour of largest degree, ties by id.
inline std::optional<std::pair<VertexId, VertexId>> pick_branch_vertex(const Instance& inst,
                                                                       BranchPolicy policy = BranchPolicy::SmallestId) {
  std::optional<std::pair<VertexId, VertexId>> best;
  std::size_t best_degree = 0;
  for (VertexId t : inst.terminals) {
    for (VertexId w : inst.graph.neighbors(t)) {
      if (inst.is_terminal(w)) continue;
      if (policy == BranchPolicy::SmallestId) return std::pair{t, w};
      std::size_t d = inst.graph.neighbors(w).size();
      if (!best || d > best_degree) {
        best = std::pair{t, w};
        best_degree = d;
      }
    }
  }
  return best;
}

/// max(1, 4^(pp + 1)) for half-integral pp; nullopt if it does not fit.
inline std::optional<std::uint64_t> node_bound(const Rational& root_pp) {
  Rational e = Rational(2) * root_pp + Rational(2);
  if (!e.is_integer()) throw ConsistencyError("root pp " + root_pp.str() + " is not half-integral");
  if (e.sign() <= 0) return 1;
  if (e >= Rational(63)) return std::nullopt;
  return std::uint64_t{1} << std::stoi(e.str());
}

namespace detail {

class BranchSolver {
 public:
  BranchSolver(const SolverOptions& opt, SolveStats& stats) : opt_(opt), stats_(stats) {}

  std::optional<VertexSet> run(const Instance& inst, VertexSet deleted, std::size_t depth) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    ReduceOptions ro{opt_.mode, opt_.check_invariants, &stats_.lp, &stats_.fixpoints};
    ReductionResult red = reduce_exhaustively(inst, ro, depth);
    if (opt_.trace) {
      for (auto& e : red.trace.entries) {
        e.deleted.insert(deleted.begin(), deleted.end());
        opt_.trace->push(std::move(e));
      }
    }
    deleted.insert(red.deleted.begin(), red.deleted.end());
    if (red.verdict == Verdict::No) return std::nullopt;
    if (red.verdict == Verdict::Yes) {
      deleted.insert(red.witness.begin(), red.witness.end());
      return deleted;
    }

    const Instance& cur = red.instance;
    auto pick = pick_branch_vertex(cur, opt_.policy);
    if (!pick) {
      log(Step::Solved, {}, deleted, depth);
      return deleted;
    }
    auto [t, w] = *pick;

    Instance removed = cur;
    removed.graph.erase_vertex(w);
    --removed.k;
    Instance contracted = cur;
    contracted.graph = contract_edge(cur.graph, cur.terminals, t, w);

    if (opt_.check_invariants) {
      Rational parent = pp(cur, &stats_.lp);
      Rational limit = parent - Rational(1, 2);
      if (pp(removed, &stats_.lp) > limit) throw ConsistencyError("deletion branch did not drop pp by 1/2");
      auto c = solve_lp(contracted, {}, &stats_.lp);
      if (c && Rational(contracted.k) - c->value > limit) {
        throw ConsistencyError("contraction branch did not drop pp by 1/2");
      }
    }

    VertexSet with_w = deleted;
    with_w.insert(w);
    log(Step::Delete, {w}, with_w, depth);
    if (auto r = run(removed, std::move(with_w), depth + 1)) return r;
    log(Step::Contract, {t, w}, deleted, depth);
    return run(contracted, std::move(deleted), depth + 1);
  }

 private:
  void log(Step step, std::vector<VertexId> vertices, const VertexSet& deleted, std::size_t depth) {
    if (opt_.trace) opt_.trace->push(TraceEntry{step, std::move(vertices), deleted, depth});
  }

  const SolverOptions& opt_;
  SolveStats& stats_;
};

}  // namespace detail

/// Decides (G, T, k). Every YES carries a witness checked against `inst`.
inline SolveResult solve(const Instance& inst, const SolverOptions& opt = {}) {
  inst.validate();
  auto start = std::chrono::steady_clock::now();
  SolveResult res;
  if (!detail::adjacent_terminals(inst)) {
    res.stats.root_pp = pp(inst, &res.stats.lp);
    res.stats.node_bound = node_bound(*res.stats.root_pp);
  }
  detail::BranchSolver solver(opt, res.stats);
  auto witness = solver.run(inst, {}, 0);
  res.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (witness) {
    if (!verify_multiway_solution(inst, *witness)) {
      throw ConsistencyError("solver witness does not verify against the input instance");
    }
    res.yes = true;
    res.witness = std::move(*witness);
  }
  if (res.stats.node_bound && res.stats.nodes > *res.stats.node_bound) {
    throw ConsistencyError("search visited " + std::to_string(res.stats.nodes) + " nodes, above the bound " +
                           std::to_string(*res.stats.node_bound));
  }
  return res;
}

inline SolveResult solve_above_lp(const Instance& inst, SolverOptions opt = {}) {
  opt.mode = Mode::AboveLp;
  return solve(inst, opt);
}

inline SolveResult solve_above_cut(const Instance& inst, SolverOptions opt = {}) {
  opt.mode = Mode::AboveCut;
  return solve(inst, opt);
}

inline SolveResult solve_standard(const Instance& inst, SolverOptions opt = {}) {
  opt.mode = Mode::Standard;
  return solve(inst, opt);
}

}  // namespace mwcut
