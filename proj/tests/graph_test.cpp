#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "acdaa/errors.hpp"
#include "acdaa/graph.hpp"
#include "support.hpp"

namespace acdaa {
namespace {

using EdgeSet = std::set<std::pair<Vertex, Vertex>>;

EdgeSet edge_set(const FrequencyGraph& g) {
  EdgeSet out;
  for (const auto& e : g.edges()) out.emplace(e.u, e.v);
  return out;
}

DissimilarityMatrix from_rows(std::size_t n, std::vector<double> entries) {
  return DissimilarityMatrix(n, std::move(entries));
}

TEST(FrequencyGraph, RejectsBadEdges) {
  FrequencyGraph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), InvalidInput);
  EXPECT_THROW(g.add_edge(2, 2), InvalidInput);
  EXPECT_THROW(g.add_edge(0, 3), InvalidInput);
  EXPECT_THROW(g.add_edge(0, 2, -1), InvalidInput);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(NeighborhoodGraph, FivePointsComplete) {
  const auto d = points_to_dissimilarity(PointSet(2, {0, 0, 1, 0, 0, 2.5, 4, 1, 7, 3}));
  const auto g = build_neighborhood_graph(d);
  EXPECT_EQ(g.edge_count(), 10u);
}

TEST(NeighborhoodGraph, ThreePointsComplete) {
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 5}));
  EXPECT_EQ(build_neighborhood_graph(d).edge_count(), 3u);
}

TEST(NeighborhoodGraph, TiesAtFourthIncluded) {
  // Object 0 sees distances 1,2,3,4,4,4; every other pair is far apart.
  const std::size_t n = 7;
  std::vector<double> e(n * n, 0.0);
  const double row0[] = {0, 1, 2, 3, 4, 4, 4};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i == 0) e[j] = row0[j];
      else if (j == 0) e[i * n] = row0[i];
      else e[i * n + j] = 10.0 + static_cast<double>(i + j);
    }
  }
  const auto g = build_neighborhood_graph(from_rows(n, e));
  EXPECT_EQ(g.degree(0), 6u);
}

TEST(NeighborhoodGraph, UnionOfSelections) {
  // Object 5 is far away: nobody selects it, but it selects four others.
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 2, 3, 4, 100}));
  const auto g = build_neighborhood_graph(d);
  EXPECT_EQ(g.degree(5), 4u);
  EXPECT_TRUE(g.has_edge(5, 1));
  EXPECT_FALSE(g.has_edge(5, 0));
}

TEST(NeighborhoodGraph, RejectsSingleObject) {
  EXPECT_THROW(build_neighborhood_graph(from_rows(1, {0.0})), InvalidInput);
}

TEST(NeighborhoodGraph, MinimumDegree) {
  std::mt19937_64 rng(2);
  for (std::size_t n : {2u, 4u, 6u, 17u, 80u}) {
    const auto g = build_neighborhood_graph(testing::random_points_matrix(n, rng));
    for (std::size_t v = 0; v < n; ++v) {
      EXPECT_GE(g.degree(static_cast<Vertex>(v)), std::min<std::size_t>(4, n - 1));
    }
  }
}

TEST(NeighborhoodGraph, TiePermutationInvariance) {
  // Integer grid points have many equal distances.
  std::vector<double> coords;
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 5; ++y) {
      coords.push_back(x);
      coords.push_back(y);
    }
  }
  const std::size_t n = coords.size() / 2;
  const auto base = edge_set(build_neighborhood_graph(points_to_dissimilarity(PointSet(2, coords))));

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vertex> perm(n);  // new position -> original object
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> shuffled;
    for (Vertex v : perm) {
      shuffled.push_back(coords[2 * static_cast<std::size_t>(v)]);
      shuffled.push_back(coords[2 * static_cast<std::size_t>(v) + 1]);
    }
    const auto g = build_neighborhood_graph(points_to_dissimilarity(PointSet(2, shuffled)));
    EdgeSet mapped;
    for (const auto& e : g.edges()) {
      const Vertex a = perm[static_cast<std::size_t>(e.u)];
      const Vertex b = perm[static_cast<std::size_t>(e.v)];
      mapped.emplace(std::min(a, b), std::max(a, b));
    }
    EXPECT_EQ(mapped, base);
  }
}

TEST(NeighborhoodGraph, ParallelMatchesSerial) {
  std::mt19937_64 rng(6);
  const auto d = testing::random_points_matrix(250, rng);
  for (int k : {1, 4, 9}) {
    const auto a = build_neighborhood_graph(d, k);
    const auto b = build_neighborhood_graph_serial(d, k);
    ASSERT_EQ(a.edge_count(), b.edge_count());
    for (std::size_t e = 0; e < a.edge_count(); ++e) {
      EXPECT_EQ(a.edges()[e].u, b.edges()[e].u);
      EXPECT_EQ(a.edges()[e].v, b.edges()[e].v);
    }
  }
}

TEST(Components, Edgeless) {
  const auto comps = connected_components(FrequencyGraph(4));
  ASSERT_EQ(comps.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(comps[i], VertexSet{static_cast<Vertex>(i)});
}

TEST(Components, Complete) {
  EXPECT_EQ(connected_components(testing::complete_graph(5)).size(), 1u);
}

TEST(Components, TwoTriangles) {
  const auto g = testing::graph_from(6, {{0, 4}, {4, 2}, {2, 0}, {1, 3}, {3, 5}, {5, 1}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 2, 4}));
  EXPECT_EQ(comps[1], (VertexSet{1, 3, 5}));
}

TEST(Components, RestrictedAndMasked) {
  const auto g = testing::graph_from(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const VertexSet keep{0, 1, 3, 4};
  EXPECT_EQ(connected_components(g, keep).size(), 2u);
  const std::vector<char> active{1, 0, 1, 1};
  const auto comps = connected_components(g, std::span<const char>(active));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[1], (VertexSet{2, 3, 4}));
}

TEST(Repair, ConnectedUnchanged) {
  auto sub = whole_graph(testing::complete_graph(3));
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 2}));
  EXPECT_EQ(repair_connectivity(sub, d), 0u);
  EXPECT_EQ(sub.graph.edge_count(), 3u);
}

TEST(Repair, JoinsClosestPair) {
  auto sub = whole_graph(testing::graph_from(3, {{1, 2}}));
  const auto d = from_rows(3, {0, 1, 2, 1, 0, 1, 2, 1, 0});
  EXPECT_EQ(repair_connectivity(sub, d), 1u);
  EXPECT_TRUE(sub.graph.has_edge(0, 1));
  EXPECT_FALSE(sub.graph.has_edge(0, 2));
}

TEST(Repair, ThreeComponentsTwoEdges) {
  auto sub = whole_graph(testing::graph_from(6, {{0, 1}, {2, 3}, {4, 5}}));
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 5, 6, 20, 21}));
  EXPECT_EQ(repair_connectivity(sub, d), 2u);
  EXPECT_TRUE(sub.graph.has_edge(1, 2));
  EXPECT_TRUE(sub.graph.has_edge(3, 4));
  EXPECT_EQ(connected_components(sub.graph).size(), 1u);
}

TEST(Repair, LexicographicTieBreak) {
  // 0 and 3 are equally close to the pair {1, 2}.
  auto sub = whole_graph(testing::graph_from(4, {{1, 2}}));
  const auto d = points_to_dissimilarity(PointSet(1, {0, 1, 2, 3}));
  EXPECT_EQ(repair_connectivity(sub, d), 2u);
  EXPECT_TRUE(sub.graph.has_edge(0, 1));
  EXPECT_TRUE(sub.graph.has_edge(2, 3));
}

TEST(Repair, InducedSubgraphUsesParentIds) {
  const auto g = testing::graph_from(5, {{0, 4}, {1, 3}});
  auto sub = induced_subgraph(g, VertexSet{1, 3, 4});
  const auto d = points_to_dissimilarity(PointSet(1, {0, 10, 20, 11, 2}));
  EXPECT_EQ(repair_connectivity(sub, d), 1u);
  // local 0 = parent 1, local 2 = parent 4: d(1,4) = 8 beats d(3,4) = 9.
  EXPECT_TRUE(sub.graph.has_edge(0, 2));
}

TEST(Repair, CountIsComponentsMinusOne) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + static_cast<std::size_t>(trial);
    const auto d = testing::random_points_matrix(n, rng);
    FrequencyGraph g(n);
    std::bernoulli_distribution keep(0.05);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (keep(rng)) g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
      }
    }
    const auto before = connected_components(g).size();
    auto sub = whole_graph(std::move(g));
    EXPECT_EQ(repair_connectivity(sub, d), before - 1);
    EXPECT_EQ(connected_components(sub.graph).size(), 1u);
  }
}

TEST(CutEdges, Examples) {
  EXPECT_EQ(cut_edges(testing::complete_graph(2), VertexSet{0}).size(), 1u);

  const auto bridge = testing::two_cliques_with_bridge(3);
  const auto cut = cut_edges(bridge, VertexSet{0, 1, 2});
  ASSERT_EQ(cut.size(), 1u);
  EXPECT_EQ(cut.crossing_edges[0], std::make_pair(2, 3));
  EXPECT_EQ(cut.part_b, (VertexSet{3, 4, 5}));

  EXPECT_EQ(cut_edges(testing::complete_graph(4), VertexSet{1, 3}).size(), 4u);
}

TEST(CutEdges, RejectsEmptyOrFull) {
  const auto g = testing::complete_graph(3);
  EXPECT_THROW(cut_edges(g, VertexSet{}), InvalidInput);
  EXPECT_THROW(cut_edges(g, VertexSet{0, 1, 2}), InvalidInput);
}

}  // namespace
}  // namespace acdaa
