#include "mwcut/oracles.hpp"
#include "mwcut/reductions.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace mwcut {
namespace {

using testing::make_instance;
using testing::p3;
using testing::p4;
using testing::triangle_gadget;
namespace tri = testing::tri;

TEST(Rule1, Examples) {
  EXPECT_EQ(rule1(testing::terminal_edge()).verdict, Verdict::No);
  EXPECT_EQ(rule1(triangle_gadget(1)).verdict, Verdict::No);
  EXPECT_FALSE(rule1(p3(1)).applicable());
  EXPECT_EQ(rule1(p3(0)).verdict, Verdict::No);
}

TEST(Rule2, Examples) {
  auto o = rule2(p3(1));
  ASSERT_EQ(o.verdict, Verdict::Continue);
  EXPECT_EQ(o.entry.vertices, (std::vector<VertexId>{2}));
  EXPECT_EQ(o.instance.k, 0);
  EXPECT_FALSE(o.instance.graph.has_vertex(2));

  // star: w = 4 adjacent to terminals 1, 2, 3
  auto star = make_instance(4, {{1, 4}, {2, 4}, {3, 4}}, {1, 2, 3}, 2);
  o = rule2(star);
  ASSERT_EQ(o.verdict, Verdict::Continue);
  EXPECT_EQ(o.entry.vertices, (std::vector<VertexId>{4}));
  EXPECT_EQ(o.instance.k, 1);

  EXPECT_FALSE(rule2(triangle_gadget()).applicable());
  EXPECT_FALSE(rule2(p4()).applicable());
}

TEST(Rule3, Examples) {
  auto o = rule3(p4(1));
  ASSERT_EQ(o.verdict, Verdict::Continue);
  EXPECT_EQ(o.entry.vertices, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(o.instance.graph.edges(), (std::vector<std::pair<VertexId, VertexId>>{{1, 3}, {3, 4}}));
  EXPECT_EQ(o.instance.k, 1);
  EXPECT_TRUE(o.instance.graph.has_edge(1, 3));
  EXPECT_FALSE(o.instance.graph.has_vertex(2));

  EXPECT_FALSE(rule3(p3(1)).applicable());
  EXPECT_FALSE(rule3(triangle_gadget()).applicable());
}

TEST(Rule4, Examples) {
  auto o = rule4(triangle_gadget(2));
  ASSERT_EQ(o.verdict, Verdict::Yes);
  EXPECT_EQ(o.witness, (VertexSet{tri::b, tri::c}));

  // P3 with v kept (rule 2 would normally fire first): s = 2, lpcon = 0 >= 0
  o = rule4(p3(1));
  ASSERT_EQ(o.verdict, Verdict::Yes);
  EXPECT_EQ(o.witness, (VertexSet{2}));
}

TEST(Rule4, NotApplicableWithOneTerminal) {
  EXPECT_FALSE(rule4(make_instance(2, {{1, 2}}, {1}, 0)).applicable());
}

TEST(Rule5, Examples) {
  auto with_isolated = make_instance(4, {{1, 2}, {2, 3}}, {1, 3}, 1);
  auto o = rule5(with_isolated);
  ASSERT_EQ(o.verdict, Verdict::Continue);
  EXPECT_EQ(o.entry.vertices, (std::vector<VertexId>{4}));
  EXPECT_EQ(o.instance.k, 1);

  // {t3 = 4, x = 5} is separate from the P3
  auto split = make_instance(5, {{1, 2}, {2, 3}, {4, 5}}, {1, 3, 4}, 1);
  o = rule5(split);
  ASSERT_EQ(o.verdict, Verdict::Continue);
  EXPECT_EQ(o.entry.vertices, (std::vector<VertexId>{4, 5}));
  EXPECT_EQ(o.instance.terminals, (VertexSet{1, 3}));

  EXPECT_FALSE(rule5(p3()).applicable());
}

TEST(ReduceExhaustively, Examples) {
  auto r = reduce_exhaustively(p4(1), {Mode::AboveCut});
  EXPECT_EQ(r.verdict, Verdict::Yes);
  EXPECT_TRUE(verify_multiway_solution(p4(1), r.witness));

  EXPECT_EQ(reduce_exhaustively(testing::terminal_edge()).verdict, Verdict::No);

  r = reduce_exhaustively(triangle_gadget(2), {Mode::AboveLp});
  EXPECT_EQ(r.verdict, Verdict::Continue);
  EXPECT_EQ(r.instance, triangle_gadget(2));
  EXPECT_TRUE(r.trace.entries.empty());
}

TEST(ReduceExhaustively, TraceText) {
  auto r = reduce_exhaustively(p4(1), {Mode::AboveLp});
  std::ostringstream out;
  r.trace.write(out);
  EXPECT_EQ(out.str().substr(0, 10), "0 rule3 1 ");
}

TEST(FixpointStructure, Examples) {
  EXPECT_TRUE(check_lemma3(triangle_gadget()));
  auto fix = reduce_exhaustively(p4(2), {Mode::AboveLp});
  if (fix.verdict == Verdict::Continue) {
    EXPECT_TRUE(check_lemma3(fix.instance));
  }
  // P3 breaks it, but rule 2 removes v first
  EXPECT_FALSE(check_lemma3(p3()));
}

TEST(TerminalBound, Examples) {
  auto b = terminal_bound_stats(triangle_gadget(2));
  EXPECT_EQ(b.terminals, 3u);
  EXPECT_EQ(b.twice_k, 4);
  EXPECT_TRUE(b.holds);
  b = terminal_bound_stats(p3(1));
  EXPECT_EQ(b.terminals, 2u);
  EXPECT_EQ(b.twice_k, 2);
  EXPECT_TRUE(b.holds);
}

TEST(ModeNames, RoundTrip) {
  for (Mode m : {Mode::AboveLp, Mode::AboveCut, Mode::Standard}) EXPECT_EQ(parse_mode(mode_name(m)), m);
  EXPECT_FALSE(parse_mode("fast"));
}

Instance random_small(Rng& rng, std::size_t max_vertices) {
  RandomInstanceParams params;
  params.vertices = static_cast<std::size_t>(rng.between(2, static_cast<std::int64_t>(max_vertices)));
  params.terminals = static_cast<std::size_t>(rng.between(1, std::min<std::int64_t>(4, params.vertices)));
  params.edge_num = static_cast<std::uint64_t>(rng.between(1, 4));
  params.edge_den = 6;
  params.k = rng.between(0, 4);
  params.connected = rng.chance(1, 2);
  params.separate_terminals = rng.chance(4, 5);
  return random_instance(params, rng);
}

// Reduced instance (or verdict) keeps the brute-force answer; trace replays.
TEST(ReduceExhaustively, SoundAgainstEnumeration) {
  Rng rng(77);
  for (int iter = 0; iter < 600; ++iter) {
    Instance inst = random_small(rng, 10);
    for (Mode mode : {Mode::AboveLp, Mode::AboveCut, Mode::Standard}) {
      auto r = reduce_exhaustively(inst, {mode, true});
      bool expected = oracle::brute_nmc_decide(inst);
      switch (r.verdict) {
        case Verdict::No: ASSERT_FALSE(expected) << "iteration " << iter; break;
        case Verdict::Yes:
          ASSERT_TRUE(expected) << "iteration " << iter;
          ASSERT_TRUE(verify_multiway_solution(inst, r.witness));
          break;
        default: {
          ASSERT_EQ(oracle::brute_nmc_decide(r.instance), expected) << "iteration " << iter;
          EXPECT_EQ(replay(inst, r.trace), r.instance);
          EXPECT_TRUE(check_lemma3(r.instance));
          EXPECT_TRUE(terminal_bound_stats(r.instance).holds);
        }
      }
    }
  }
}

}  // namespace
}  // namespace mwcut
