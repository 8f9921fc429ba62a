#include "mwcut/flow.hpp"
#include "mwcut/oracles.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <bit>

namespace mwcut {
namespace {

using testing::make_instance;
using testing::p3;
using testing::triangle_gadget;
namespace tri = testing::tri;

TEST(MinVertexCut, Examples) {
  auto inst = p3();
  auto cut = min_vertex_cut(inst.graph, {1}, {3}, inst.terminals);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size, 1);
  EXPECT_EQ(cut->cut, (VertexSet{2}));

  auto apart = make_instance(4, {{1, 2}, {3, 4}}, {1, 3}, 0);
  cut = min_vertex_cut(apart.graph, {1}, {3}, apart.terminals);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size, 0);
  EXPECT_TRUE(cut->cut.empty());

  auto gadget = triangle_gadget();
  cut = min_vertex_cut(gadget.graph, {tri::t1}, {tri::t2, tri::t3}, gadget.terminals);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->size, 1);
  EXPECT_EQ(cut->cut, (VertexSet{tri::a}));
}

TEST(MinVertexCut, NoFiniteCut) {
  auto inst = testing::terminal_edge();
  EXPECT_FALSE(min_vertex_cut(inst.graph, {1}, {2}, inst.terminals));
  // path through an undeletable middle vertex
  auto p = p3();
  EXPECT_FALSE(min_vertex_cut(p.graph, {1}, {3}, {1, 2, 3}));
}

TEST(MinVertexCut, PreconditionErrors) {
  auto inst = p3();
  EXPECT_THROW(min_vertex_cut(inst.graph, {}, {3}, inst.terminals), InputError);
  EXPECT_THROW(min_vertex_cut(inst.graph, {1}, {1}, inst.terminals), InputError);
  EXPECT_THROW(min_vertex_cut(inst.graph, {1}, {3}, {1}), InputError);
}

TEST(IsolatingCut, Examples) {
  EXPECT_EQ(isolating_cut_size(p3(), 1), 1);
  for (VertexId t : {tri::t1, tri::t2, tri::t3}) EXPECT_EQ(isolating_cut_size(triangle_gadget(), t), 1);
  // three disjoint P3s
  auto stars = make_instance(9, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9}}, {1, 3, 4, 6, 7, 9}, 3);
  for (VertexId t : stars.terminals) EXPECT_EQ(isolating_cut_size(stars, t), 1);
  EXPECT_THROW(isolating_cut_size(testing::terminal_edge(), 1), InfeasibleError);
  EXPECT_THROW(isolating_cut_size(p3(), 2), InputError);
}

TEST(Lpcon, Examples) {
  EXPECT_EQ(lpcon(p3(1)), 0);
  EXPECT_EQ(lpcon(triangle_gadget(2)), 1);
  EXPECT_EQ(lpcon(triangle_gadget(1)), 0);
}

// Minimum deletable subset separating sources from sinks, by enumeration.
std::optional<std::size_t> brute_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                     const VertexSet& undeletable) {
  auto ids = g.vertices();
  std::vector<VertexId> deletable;
  for (VertexId v : ids) {
    if (undeletable.count(v) == 0) deletable.push_back(v);
  }
  std::optional<std::size_t> best;
  for (std::uint32_t mask = 0; mask < (1u << deletable.size()); ++mask) {
    auto size = static_cast<std::size_t>(std::popcount(mask));
    if (best && size >= *best) continue;
    VertexSet removed;
    for (std::size_t i = 0; i < deletable.size(); ++i) {
      if (mask >> i & 1) removed.insert(deletable[i]);
    }
    VertexSet seen(sources.begin(), sources.end());
    std::vector<VertexId> stack(sources.begin(), sources.end());
    bool hit = false;
    while (!stack.empty() && !hit) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v)) {
        if (removed.count(u) != 0 || !seen.insert(u).second) continue;
        if (sinks.count(u) != 0) hit = true;
        stack.push_back(u);
      }
    }
    if (!hit) best = size;
  }
  return best;
}

TEST(MinVertexCut, MatchesEnumerationOnSmallGraphs) {
  Rng rng(17);
  for (int iter = 0; iter < 1500; ++iter) {
    RandomInstanceParams params;
    params.vertices = static_cast<std::size_t>(rng.between(2, 10));
    params.terminals = static_cast<std::size_t>(rng.between(2, std::min<std::int64_t>(4, params.vertices)));
    params.edge_num = static_cast<std::uint64_t>(rng.between(1, 3));
    params.edge_den = 5;
    Instance inst = random_instance(params, rng);
    VertexId source = *inst.terminals.begin();
    VertexSet sinks = inst.terminals;
    sinks.erase(source);
    auto cut = min_vertex_cut(inst.graph, {source}, sinks, inst.terminals);
    auto expected = brute_cut(inst.graph, {source}, sinks, inst.terminals);
    ASSERT_EQ(cut.has_value(), expected.has_value());
    if (!cut) continue;
    EXPECT_EQ(static_cast<std::size_t>(cut->size), *expected);
    EXPECT_EQ(cut->cut.size(), static_cast<std::size_t>(cut->size));
    // the cut really separates, and never contains a terminal
    for (VertexId v : cut->cut) EXPECT_FALSE(inst.is_terminal(v));
    Graph rest = inst.graph;
    for (VertexId v : cut->cut) rest.erase_vertex(v);
    EXPECT_EQ(brute_cut(rest, {source}, sinks, inst.terminals), std::optional<std::size_t>(0));
    // m(I, t) <= |N(t)|
    if (!inst.graph.has_edge(source, *sinks.begin())) {
      bool adjacent = false;
      for (VertexId t : sinks) adjacent = adjacent || inst.graph.neighbors(source).count(t) != 0;
      if (!adjacent) EXPECT_LE(cut->size, static_cast<std::int64_t>(inst.graph.neighbors(source).size()));
    }
  }
}

}  // namespace
}  // namespace mwcut
