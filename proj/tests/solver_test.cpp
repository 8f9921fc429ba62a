#include "mwcut/oracles.hpp"
#include "mwcut/solver.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace mwcut {
namespace {

using testing::make_instance;
using testing::p3;
using testing::triangle_gadget;
namespace tri = testing::tri;

TEST(SolveAboveLp, Examples) {
  auto r = solve_above_lp(p3(1));
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.witness, (VertexSet{2}));

  r = solve_above_lp(triangle_gadget(2));
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.witness.size(), 2u);
  for (VertexId v : r.witness) EXPECT_TRUE(v == tri::a || v == tri::b || v == tri::c);

  r = solve_above_lp(triangle_gadget(1));
  EXPECT_FALSE(r.yes);
  EXPECT_EQ(r.stats.nodes, 1u);
}

TEST(SolveAboveCut, Examples) {
  Trace trace;
  SolverOptions opt;
  opt.trace = &trace;
  auto r = solve_above_cut(triangle_gadget(2), opt);
  EXPECT_TRUE(r.yes);
  EXPECT_EQ(r.witness, (VertexSet{tri::b, tri::c}));
  EXPECT_EQ(r.stats.nodes, 1u);
  ASSERT_EQ(trace.entries.size(), 1u);
  EXPECT_EQ(trace.entries[0].step, Step::Rule4);

  EXPECT_TRUE(solve_above_cut(p3(1)).yes);
  EXPECT_FALSE(solve_above_cut(testing::terminal_edge()).yes);
}

TEST(SolveStandard, Examples) {
  EXPECT_TRUE(solve_standard(p3(1)).yes);
  EXPECT_EQ(solve_standard(triangle_gadget(2)).witness, (VertexSet{tri::b, tri::c}));
  EXPECT_FALSE(solve_standard(testing::terminal_edge()).yes);
}

TEST(PickBranchVertex, Examples) {
  EXPECT_EQ(pick_branch_vertex(triangle_gadget()), (std::pair<VertexId, VertexId>{tri::t1, tri::a}));
  auto apart = make_instance(2, {}, {1, 2}, 0);
  EXPECT_FALSE(pick_branch_vertex(apart));
  // star centre 4 has degree 3, pendant 5 degree 1
  auto g = make_instance(5, {{1, 5}, {1, 4}, {4, 2}, {4, 3}}, {1, 2}, 1);
  EXPECT_EQ(pick_branch_vertex(g, BranchPolicy::SmallestId), (std::pair<VertexId, VertexId>{1, 4}));
  EXPECT_EQ(pick_branch_vertex(g, BranchPolicy::MaxDegree), (std::pair<VertexId, VertexId>{1, 4}));
}

TEST(NodeBound, Values) {
  EXPECT_EQ(node_bound(Rational(0)), 4u);
  EXPECT_EQ(node_bound(Rational(1, 2)), 8u);
  EXPECT_EQ(node_bound(Rational(-1)), 1u);
  EXPECT_EQ(node_bound(Rational(-5, 2)), 1u);
  EXPECT_THROW(node_bound(Rational(1, 3)), ConsistencyError);
}

// Wheel-free grid-like instance where the LP has slack: forces real branching.
TEST(Solve, BranchesWithMeasureChecks) {
  // cycle 4-5-6-7-8-9 with terminals 1,2,3 on alternate cycle vertices
  auto inst = make_instance(9, {{4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 4}, {1, 4}, {2, 6}, {3, 8}}, {1, 2, 3}, 3);
  SolverOptions opt;
  opt.check_invariants = true;
  for (Mode m : {Mode::AboveLp, Mode::AboveCut, Mode::Standard}) {
    opt.mode = m;
    auto r = solve(inst, opt);
    EXPECT_EQ(r.yes, oracle::brute_nmc_decide(inst));
    if (m == Mode::AboveLp) {
      EXPECT_GT(r.stats.nodes, 1u);
    }
    inst.k = 2;
    EXPECT_EQ(solve(inst, opt).yes, oracle::brute_nmc_decide(inst));
    inst.k = 3;
  }
}

TEST(Solve, AgreesWithEnumeration) {
  Rng rng(1234);
  SolverOptions opt;
  opt.check_invariants = true;
  for (int iter = 0; iter < 500; ++iter) {
    RandomInstanceParams params;
    params.vertices = static_cast<std::size_t>(rng.between(4, 12));
    params.terminals = static_cast<std::size_t>(rng.between(2, std::min<std::int64_t>(5, params.vertices)));
    params.edge_num = static_cast<std::uint64_t>(rng.between(1, 4));
    params.edge_den = 7;
    params.k = rng.between(0, 4);
    params.connected = rng.chance(2, 3);
    params.separate_terminals = rng.chance(9, 10);
    Instance inst = random_instance(params, rng);
    // k near LP(I), where the search actually has to branch
    if (params.separate_terminals && rng.chance(2, 3)) {
      inst.k = static_cast<std::int64_t>(std::floor(lp_value(inst).to_double())) + rng.between(0, 2);
    }
    bool expected = oracle::brute_nmc_decide(inst);
    for (Mode m : {Mode::AboveLp, Mode::AboveCut, Mode::Standard}) {
      opt.mode = m;
      auto r = solve(inst, opt);
      ASSERT_EQ(r.yes, expected) << "iteration " << iter << " mode " << mode_name(m);
      if (r.yes) {
        ASSERT_TRUE(verify_multiway_solution(inst, r.witness));
      }
      if (r.stats.node_bound) {
        EXPECT_LE(r.stats.nodes, *r.stats.node_bound);
      }
    }
  }
}

// Random graph H on n vertices with a pendant terminal on every vertex.
Instance pendant_instance(VertexId n, std::uint64_t num, Rng& rng) {
  Instance inst;
  for (VertexId v = 1; v <= 2 * n; ++v) inst.graph.add_vertex(v);
  for (VertexId u = 1; u <= n; ++u) {
    inst.graph.add_edge(u, n + u);
    inst.terminals.insert(n + u);
    for (VertexId v = u + 1; v <= n; ++v) {
      if (rng.chance(num, 7)) inst.graph.add_edge(u, v);
    }
  }
  return inst;
}

TEST(Solve, AgreesWithEnumerationWhenBranching) {
  Rng rng(4321);
  SolverOptions opt;
  opt.check_invariants = true;
  int branched = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Instance inst = pendant_instance(static_cast<VertexId>(rng.between(3, 8)), rng.between(2, 5), rng);
    inst.k = static_cast<std::int64_t>(std::floor(lp_value(inst).to_double())) + rng.between(-1, 1);
    bool expected = oracle::brute_nmc_decide(inst);
    for (Mode m : {Mode::AboveLp, Mode::AboveCut, Mode::Standard}) {
      opt.mode = m;
      auto r = solve(inst, opt);
      ASSERT_EQ(r.yes, expected) << "iteration " << iter << " mode " << mode_name(m);
      if (r.yes) {
        ASSERT_TRUE(verify_multiway_solution(inst, r.witness));
      }
      ASSERT_TRUE(r.stats.node_bound);
      EXPECT_LE(r.stats.nodes, *r.stats.node_bound);
      branched += m == Mode::AboveLp && r.stats.nodes > 1;
    }
  }
  EXPECT_GT(branched, 40);
}

}  // namespace
}  // namespace mwcut
