#include <gtest/gtest.h>

#include <cmath>

#include "oracles/oracles.hpp"
#include "parcut/graph.hpp"
#include "parcut/lca.hpp"
#include "parcut/random_graph.hpp"
#include "parcut/stoer_wagner.hpp"
#include "parcut/tree.hpp"
#include "support.hpp"

using namespace parcut;

TEST(ParseGraph, SimpleEdgeList) {
  const auto p = parse_graph("a b 1\nb c 1");
  EXPECT_EQ(p.graph.num_vertices(), 3);
  EXPECT_EQ(p.graph.num_edges(), 2);
  EXPECT_EQ(p.tokens, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(ParseGraph, FigureOneGraph) {
  const auto p = testing_support::fig1();
  EXPECT_EQ(p.graph.num_vertices(), 6);
  EXPECT_EQ(p.graph.num_edges(), 8);
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const auto p = parse_graph("# header\n\nx y 4   # trailing\n\n");
  EXPECT_EQ(p.graph.num_edges(), 1);
  EXPECT_EQ(p.graph.edge(0).w, 4);
}

TEST(ParseGraph, RejectsBadInput) {
  EXPECT_THROW(parse_graph("a b 0"), ParseError);
  EXPECT_THROW(parse_graph("a b -3"), ParseError);
  EXPECT_THROW(parse_graph("a b"), ParseError);
  EXPECT_THROW(parse_graph("a b 1 2"), ParseError);
  EXPECT_THROW(parse_graph("a b x"), ParseError);
  EXPECT_THROW(parse_graph("a a 1"), GraphError);
  EXPECT_THROW(parse_graph(""), GraphError);
}

TEST(ParseGraph, SelfLoopsDropped) {
  const auto p = parse_graph("a b 2\nb b 5\n");
  EXPECT_EQ(p.graph.num_edges(), 1);
  EXPECT_EQ(p.graph.weighted_degree(1), 2);
}

TEST(ParseGraph, MissingFile) { EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), std::exception); }

TEST(Graph, AdjacencyMatchesEdges) {
  Rng rng(3);
  const Graph g = random_connected_graph(20, 40, 9, rng);
  std::vector<int> seen(g.num_edges(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Weight deg = 0;
    for (const auto& inc : g.neighbors(v)) {
      const auto& e = g.edge(inc.edge);
      EXPECT_TRUE((e.u == v && e.v == inc.neighbor) || (e.v == v && e.u == inc.neighbor));
      EXPECT_EQ(e.w, inc.weight);
      ++seen[inc.edge];
      deg += inc.weight;
    }
    EXPECT_EQ(deg, g.weighted_degree(v));
  }
  for (int s : seen) EXPECT_EQ(s, 2);
}

TEST(CutValue, FigureOne) {
  const auto p = testing_support::fig1();
  EXPECT_EQ(cut_value(p.graph, testing_support::side_of(p, {"G", "A", "C"})), 2);
}

TEST(CutValue, SingletonIsDegree) {
  Rng rng(5);
  const Graph g = random_connected_graph(10, 20, 7, rng);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexMask side(g.num_vertices(), false);
    side[v] = true;
    EXPECT_EQ(cut_value(g, side), g.weighted_degree(v));
  }
}

TEST(CutValue, MatchesSummationAndComplement) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const Graph g = random_connected_graph(8, 12, 9, rng);
    VertexMask side(8);
    do {
      for (VertexId v = 0; v < 8; ++v) side[v] = rng.coin();
    } while (std::count(side.begin(), side.end(), true) % 8 == 0);
    EXPECT_EQ(cut_value(g, side), oracle::crossing_weight(g, side));
    VertexMask other = side;
    other.flip();
    EXPECT_EQ(cut_value(g, side), cut_value(g, other));
  }
}

TEST(CutValue, RejectsEmptyOrFullSide) {
  const auto p = testing_support::fig1();
  EXPECT_THROW(cut_value(p.graph, VertexMask(6, false)), GraphError);
  EXPECT_THROW(cut_value(p.graph, VertexMask(6, true)), GraphError);
}

TEST(Contract, Identity) {
  const auto p = testing_support::fig1();
  std::vector<VertexId> map{0, 1, 2, 3, 4, 5};
  const Graph c = contract(p.graph, map);
  EXPECT_EQ(c.num_vertices(), 6);
  EXPECT_EQ(c.num_edges(), 8);
}

TEST(Contract, TriangleMerge) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const std::vector<VertexId> map{0, 0, 1};
  const Graph c = contract(g, map);
  EXPECT_EQ(c.num_vertices(), 2);
  EXPECT_EQ(c.num_edges(), 2);
  for (const auto& e : c.edges()) EXPECT_NE(e.u, e.v);
}

TEST(Contract, PreservesNonSeparatingCuts) {
  const auto p = testing_support::fig1();
  const VertexId q = testing_support::id_of(p, "Q");
  const VertexId e = testing_support::id_of(p, "E");
  std::vector<VertexId> map(6);
  VertexId next = 0;
  for (VertexId v = 0; v < 6; ++v) {
    if (v != e) map[v] = next++;
  }
  map[e] = map[q];
  const Graph c = contract(p.graph, map);
  ASSERT_EQ(c.num_vertices(), 5);
  for (std::uint32_t mask = 1; mask < 63; ++mask) {
    VertexMask side(6);
    for (VertexId v = 0; v < 6; ++v) side[v] = (mask >> v) & 1;
    if (side[q] != side[e]) continue;
    VertexMask small(5);
    for (VertexId v = 0; v < 6; ++v) small[map[v]] = side[v];
    EXPECT_EQ(cut_value(p.graph, side), cut_value(c, small));
  }
}

TEST(Contract, RejectsNonSurjectiveMap) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}});
  const std::vector<VertexId> map{0, 2, 2};
  EXPECT_THROW(contract(g, map), GraphError);
}

TEST(Components, TwoTriangles) {
  const Graph g(6, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {3, 4, 1}, {4, 5, 1}, {5, 3, 1}});
  const auto c = connected_components(g);
  EXPECT_EQ(c.count, 2);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(c.label[0], c.label[2]);
  EXPECT_NE(c.label[0], c.label[3]);
}

TEST(SpanningTree, PathIsItself) {
  const Graph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  const std::vector<double> cost(3, 1.0);
  const auto t = spanning_tree(g, cost);
  EXPECT_EQ(t.root(), 0);
  EXPECT_EQ(t.parent(1), 0);
  EXPECT_EQ(t.parent(2), 1);
  EXPECT_EQ(t.parent(3), 2);
  EXPECT_EQ(t.depth(3), 3);
}

TEST(SpanningTree, TriangleOmitsHeaviestEdge) {
  const Graph g(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const std::vector<double> cost{1, 2, 3};
  const auto t = spanning_tree(g, cost);
  EXPECT_EQ(t.parent(1), 0);
  EXPECT_EQ(t.parent(2), 1);
}

TEST(SpanningTree, MatchesPrimOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const Graph g = random_connected_graph(16, 30, 5, rng);
    std::vector<double> cost(g.num_edges());
    for (auto& c : cost) c = static_cast<double>(rng.below(20));
    const auto forest = minimum_spanning_forest(g, cost);
    ASSERT_EQ(forest.size(), 15u);
    double total = 0;
    for (EdgeId e : forest) total += cost[e];
    EXPECT_DOUBLE_EQ(total, oracle::mst_cost(g, cost));
    const auto t = spanning_tree(g, cost);
    EXPECT_EQ(t.size(), 16);
  }
}

TEST(SpanningTree, DisconnectedThrows) {
  const Graph g(4, {{0, 1, 1}, {2, 3, 1}});
  const std::vector<double> cost(2, 1.0);
  EXPECT_THROW(spanning_tree(g, cost), DisconnectedGraph);
}

TEST(RootedTree, PreorderDescendantTestMatchesWalk) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto t = random_tree(1 + static_cast<VertexId>(rng.below(64)), rng);
    for (VertexId a = 0; a < t.size(); ++a) {
      for (VertexId d = 0; d < t.size(); ++d) EXPECT_EQ(t.is_ancestor(a, d), oracle::ancestor_by_walk(t, a, d));
    }
  }
}

TEST(RootedTree, RejectsCycles) {
  EXPECT_THROW(RootedTree::from_parents({0, 2, 1}, 0), GraphError);
  EXPECT_THROW(RootedTree::from_parents({1, 0}, 0), GraphError);
}

TEST(RootedTree, InducedSubtree) {
  // 0 -> {1, 2}, 1 -> {3}
  const auto t = RootedTree::from_parents({0, 0, 0, 1}, 0);
  const VertexMask keep{true, true, false, false};
  const auto sub = induced_subtree(t, keep);
  ASSERT_EQ(sub.tree.size(), 2);
  EXPECT_EQ(sub.to_outer[sub.tree.root()], 0);
  EXPECT_EQ(sub.to_inner[2], kNoVertex);
  EXPECT_EQ(sub.to_outer[sub.tree.parent(sub.to_inner[1])], 0);
}

TEST(Lca, MatchesNaive) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto t = random_tree(1 + static_cast<VertexId>(rng.below(50)), rng);
    const LcaIndex index(t);
    for (VertexId a = 0; a < t.size(); ++a) {
      for (VertexId b = 0; b < t.size(); ++b) EXPECT_EQ(index.lca(a, b), oracle::lca(t, a, b));
    }
  }
}

TEST(StoerWagner, FigureOne) {
  const auto p = testing_support::fig1();
  const auto cut = stoer_wagner(p.graph);
  EXPECT_EQ(cut.value, 2);
  EXPECT_EQ(cut_value(p.graph, cut.side), 2);
}

TEST(StoerWagner, SingleEdge) { EXPECT_EQ(stoer_wagner(Graph(2, {{0, 1, 5}})).value, 5); }

TEST(StoerWagner, Disconnected) {
  const Graph g(4, {{0, 1, 3}, {2, 3, 3}});
  const auto cut = stoer_wagner(g);
  EXPECT_EQ(cut.value, 0);
  EXPECT_EQ(cut_value(g, cut.side), 0);
}

TEST(StoerWagner, MatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const auto n = static_cast<VertexId>(2 + rng.below(9));
    const Graph g = random_connected_graph(n, static_cast<std::int64_t>(rng.below(3 * n)), 10, rng);
    const auto cut = stoer_wagner(g);
    EXPECT_EQ(cut.value, oracle::min_cut(g)) << "seed " << seed;
    EXPECT_EQ(cut_value(g, cut.side), cut.value);
  }
}
