#include "interior/recursion.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "interior/error.hpp"
#include "interior/matching.hpp"
#include "oracles.hpp"

using namespace interior;

namespace {

// v0 w0 v1 w1 ... around a cycle of length 2k.
BipartiteGraph cycle(std::uint32_t k) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < k; ++i) {
    edges.push_back({i, i});
    edges.push_back({(i + 1) % k, i});
  }
  return BipartiteGraph::build(k, k, edges);
}

// P2 x P3: columns c = 0, 1, 2 with rungs v_c w_c and rails v_c w_{c+1}, v_{c+1} w_c.
BipartiteGraph ladder3() {
  return BipartiteGraph::build(3, 3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}});
}

// Random non-expanding set with every member of degree >= 1, or nothing.
std::optional<VertexSet> random_nonexpanding(std::mt19937_64& rng, const BipartiteGraph& g) {
  for (int attempt = 0; attempt < 40; ++attempt) {
    const Side side = rng() % 2 ? Side::V : Side::W;
    Mask usable = 0;
    for (std::size_t i = 0; i < g.count(side); ++i)
      if (g.degree(side, i) > 0) usable |= bit(i);
    const VertexSet s{side, rng() & usable};
    if (!s.empty() && is_nonexpanding(g, s)) return s;
  }
  return std::nullopt;
}

}  // namespace

TEST(AlternatingSum, Examples) {
  const auto k23 = oracle::complete(2, 3);
  EXPECT_TRUE(alternating_sum(k23, VertexSet::of(Side::W, {0, 1})).is_zero());
  EXPECT_TRUE(alternating_sum(k23, k23.all(Side::W)).is_zero());
  EXPECT_EQ(alternating_sum(k23, {Side::W, 0}), interior_via_ehrhart(k23));
}

TEST(AlternatingSum, IsolatedMemberBreaksTheIdentity) {
  // K_{1,1} plus a lone vertex u = v1; S = {u} is non-expanding.
  const auto g = BipartiteGraph::build(2, 1, {{0, 0}});
  const VertexSet s = VertexSet::of(Side::V, {1});
  ASSERT_TRUE(is_nonexpanding(g, s));
  EXPECT_EQ(alternating_sum(g, s), IntPolynomial({0, -1}));
}

TEST(NonExpandingRecursion, Examples) {
  EXPECT_EQ(interior_nonexpanding(ladder3()), IntPolynomial({1, 2, 1}));
  EXPECT_EQ(interior_nonexpanding(oracle::complete(2, 3)), IntPolynomial({1, 2}));
  EXPECT_EQ(interior_nonexpanding(oracle::complete(2, 2)), IntPolynomial({1, 1}));
  EXPECT_EQ(interior_nonexpanding(oracle::complete(2, 1)), IntPolynomial{1});
  EXPECT_EQ(interior_nonexpanding(BipartiteGraph::build(2, 1, {})), IntPolynomial({1, -2, 1}));
  EXPECT_EQ(interior_nonexpanding(BipartiteGraph::build(0, 1, {})), IntPolynomial{1});
  EXPECT_THROW(interior_nonexpanding(BipartiteGraph{}), InvalidInput);
}

TEST(NonExpandingRecursion, TreesGiveOne) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 50; ++trial) {
    // Random tree: attach each new vertex to an existing one of the other class.
    const std::uint32_t nv = 1 + rng() % 5, nw = 1 + rng() % 5;
    std::vector<Edge> edges{{0, 0}};
    std::uint32_t v = 1, w = 1;
    while (v < nv || w < nw) {
      if (v < nv && (w == nw || rng() % 2)) {
        edges.push_back({v++, static_cast<std::uint32_t>(rng() % w)});
      } else {
        edges.push_back({static_cast<std::uint32_t>(rng() % v), w++});
      }
    }
    const auto tree = BipartiteGraph::build(nv, nw, edges);
    ASSERT_TRUE(is_connected(tree));
    EXPECT_EQ(interior_nonexpanding(tree), IntPolynomial{1});
    EXPECT_EQ(interior_altcycle(tree), IntPolynomial{1});
  }
}

TEST(NonExpandingRecursion, ExpansionLimit) {
  RecursionOptions tight;
  tight.max_expansion = 2;
  EXPECT_THROW(interior_nonexpanding(oracle::complete(3, 3), tight), ResourceLimit);
  EXPECT_THROW(interior_altcycle(cycle(3), tight), ResourceLimit);
}

TEST(AlternatingHalf, Examples) {
  const auto square = cycle(2);
  const auto c4 = shortest_cycle(square);
  ASSERT_TRUE(c4.has_value());
  EXPECT_EQ(c4->size(), 4u);
  const auto half = find_alternating_half(square);
  ASSERT_TRUE(half.has_value());
  EXPECT_EQ(half->size(), 2u);
  EXPECT_EQ(half->front(), (Edge{0, 0}));

  EXPECT_FALSE(find_alternating_half(oracle::complete(1, 4)).has_value());
  EXPECT_FALSE(shortest_cycle(BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}})).has_value());
}

TEST(AlternatingHalf, SixCycleHalfIsAPerfectMatching) {
  const auto hex = cycle(3);
  const auto half = find_alternating_half(hex);
  ASSERT_TRUE(half.has_value());
  ASSERT_EQ(half->size(), 3u);
  std::set<std::uint32_t> vs, ws;
  for (const Edge& e : *half) {
    EXPECT_TRUE(hex.has_edge(e.v, e.w));
    vs.insert(e.v);
    ws.insert(e.w);
  }
  EXPECT_EQ(vs.size(), 3u);
  EXPECT_EQ(ws.size(), 3u);
}

TEST(AlternatingHalf, PicksAShortestCycle) {
  // K_{3,3} has 4-cycles even though longer ones exist.
  const auto c = shortest_cycle(oracle::complete(3, 3));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->size(), 4u);
}

TEST(AltCycle, Examples) {
  EXPECT_EQ(interior_altcycle(oracle::complete(2, 3)), IntPolynomial({1, 2}));
  EXPECT_EQ(interior_altcycle(cycle(2)), IntPolynomial({1, 1}));
  EXPECT_EQ(interior_altcycle(ladder3()), IntPolynomial({1, 2, 1}));
  EXPECT_EQ(interior_altcycle(BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}})), IntPolynomial({1, -1}));
  EXPECT_EQ(interior_altcycle(BipartiteGraph::build(2, 1, {})), IntPolynomial({1, -2, 1}));
}

TEST(Memo, KeysIdentifySubgraphs) {
  const auto g = oracle::complete(3, 3);
  const auto h = delete_vertices(g, VertexSet::of(Side::W, {1}));
  EXPECT_EQ(vertex_key(h), (VertexKey{0b111, 0b101}));
  EXPECT_EQ(edge_key(h), edge_key(delete_vertices(g, VertexSet::of(Side::W, {1}))));
  EXPECT_NE(edge_key(h), edge_key(delete_edges(h, std::vector<Edge>{{0, 0}})));
}

// Properties.

TEST(RecursionProperties, AllMethodsAgree) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t nv = 1 + rng() % 4, nw = 1 + rng() % 4;
    const auto g = oracle::random_graph(rng, nv, nw, 0.3 + 0.1 * (trial % 6));
    const auto expected = interior_via_ehrhart(g);
    EXPECT_EQ(interior_nonexpanding(g), expected);
    EXPECT_EQ(interior_altcycle(g), expected);
  }
}

TEST(RecursionProperties, AlternatingSumVanishes) {
  std::mt19937_64 rng(53);
  int checked = 0;
  while (checked < 60) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 4, 1 + rng() % 4, 0.5);
    const auto s = random_nonexpanding(rng, g);
    if (!s) continue;
    EXPECT_TRUE(alternating_sum(g, *s).is_zero());
    ++checked;
  }
}

TEST(RecursionProperties, ProductAndLeafRules) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 60; ++trial) {
    const auto g1 = oracle::random_graph(rng, 1 + rng() % 3, 1 + rng() % 3, 0.6);
    const auto g2 = oracle::random_graph(rng, 1 + rng() % 3, 1 + rng() % 2, 0.6);
    // Disjoint union with g2 shifted after g1.
    std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
    for (const Edge& e : g2.edges())
      edges.push_back({static_cast<std::uint32_t>(e.v + g1.v_count()), static_cast<std::uint32_t>(e.w + g1.w_count())});
    const auto both = BipartiteGraph::build(g1.v_count() + g2.v_count(), g1.w_count() + g2.w_count(), edges);
    EXPECT_EQ(interior_nonexpanding(both),
              IntPolynomial({1, -1}) * interior_nonexpanding(g1) * interior_nonexpanding(g2));

    // Hang a new leaf on a random V vertex.
    std::vector<Edge> leafy(g1.edges().begin(), g1.edges().end());
    leafy.push_back({static_cast<std::uint32_t>(rng() % g1.v_count()), static_cast<std::uint32_t>(g1.w_count())});
    const auto with_leaf = BipartiteGraph::build(g1.v_count(), g1.w_count() + 1, leafy);
    EXPECT_EQ(interior_altcycle(with_leaf), interior_altcycle(g1));
  }
}

TEST(RecursionProperties, MemoDoesNotChangeResults) {
  std::mt19937_64 rng(55);
  RecursionOptions no_memo;
  no_memo.memoize = false;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, 1 + rng() % 4, 1 + rng() % 4, 0.6);
    EXPECT_EQ(interior_nonexpanding(g, no_memo), interior_nonexpanding(g));
    EXPECT_EQ(interior_altcycle(g, no_memo), interior_altcycle(g));
  }
}

TEST(RecursionProperties, MemoEntriesAreCorrect) {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_graph(rng, 3, 3, 0.7);
    NonExpandingRecursion by_vertex(g);
    by_vertex.run();
    for (const auto& [key, value] : by_vertex.memo()) EXPECT_EQ(value, interior_via_ehrhart(by_vertex.subgraph(key)));

    AltCycleRecursion by_edge(g);
    by_edge.run();
    for (const auto& [key, value] : by_edge.memo()) EXPECT_EQ(value, interior_via_ehrhart(by_edge.subgraph(key)));
  }
}

TEST(RecursionProperties, MemoIsReused) {
  NonExpandingRecursion engine(oracle::complete(4, 4));
  engine.run();
  EXPECT_GT(engine.memo().hits(), 0u);
  EXPECT_GT(engine.memo().size(), 0u);
}
