#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "gsketch/errors.hpp"
#include "gsketch/graph.hpp"
#include "gsketch/instances.hpp"
#include "gsketch/io.hpp"
#include "oracles.hpp"

using namespace gsketch;

namespace {

std::vector<NodeId> ball_oracle(const Graph& g, NodeId c, int r, BallMode mode) {
  const auto d = oracle::floyd(g.node_count(), oracle::edges_of(g));
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const int x = d[c][v];
    if (x == oracle::kInf) continue;
    if ((mode == BallMode::at_most && x <= r) || (mode == BallMode::less_than && x < r) ||
        (mode == BallMode::exactly && x == r))
      out.push_back(v);
  }
  return out;
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndOutOfRange) {
  const Edge loop[] = {{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), std::invalid_argument);
  const Edge far[] = {{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, far), std::invalid_argument);
}

TEST(Graph, MergesDuplicatesAndKeepsAdjacencySymmetricSorted) {
  const Edge edges[] = {{2, 0}, {0, 2}, {1, 2}, {0, 1}, {3, 1}};
  const auto g = Graph::from_edges(4, edges);
  EXPECT_EQ(g.edge_count(), 4u);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto nb = g.neighbors(u);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    for (NodeId w : nb) {
      const auto back = g.neighbors(w);
      EXPECT_NE(std::find(back.begin(), back.end(), u), back.end());
    }
  }
  // Edge ids follow lexicographic order.
  for (EdgeId e = 1; e < g.edge_count(); ++e) EXPECT_LT(g.edge(e - 1), g.edge(e));
}

TEST(Bfs, PathGraph) {
  const auto d = bfs_distances(path_graph(3), 0);
  EXPECT_EQ(d, (std::vector<Dist>{0, 1, 2}));
}

TEST(Bfs, CompleteGraph) {
  const auto d = bfs_distances(complete_graph(4), 0);
  EXPECT_EQ(d, (std::vector<Dist>{0, 1, 1, 1}));
}

TEST(Bfs, DisconnectedMarkedUnreachable) {
  const Edge edges[] = {{0, 1}, {2, 3}};
  const auto d = bfs_distances(Graph::from_edges(4, edges), 0);
  EXPECT_EQ(d[1], 1);
  EXPECT_EQ(d[2], kUnreachable);
  EXPECT_EQ(d[3], kUnreachable);
}

TEST(Bfs, SourceOutOfRangeThrows) { EXPECT_THROW(bfs_distances(path_graph(3), 3), std::invalid_argument); }

TEST(Bfs, MatchesFloydOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = random_graph(40, 60, seed);
    const auto ref = oracle::floyd(40, oracle::edges_of(g));
    for (NodeId s = 0; s < 40; ++s) {
      const auto d = bfs_distances(g, s);
      for (NodeId v = 0; v < 40; ++v) EXPECT_EQ(reachable(d[v]) ? d[v] : oracle::kInf, ref[s][v]);
    }
  }
}

TEST(Bfs, TriangleInequality) {
  const auto g = random_graph(64, 150, 11);
  std::vector<std::vector<Dist>> d;
  for (NodeId s = 0; s < 64; ++s) d.push_back(bfs_distances(g, s));
  for (NodeId x = 0; x < 64; ++x)
    for (NodeId y = 0; y < 64; ++y)
      for (NodeId z = 0; z < 64; ++z) {
        if (!reachable(d[x][y]) || !reachable(d[y][z])) continue;
        ASSERT_TRUE(reachable(d[x][z]));
        ASSERT_LE(d[x][z], d[x][y] + d[y][z]);
      }
}

TEST(Ball, PathGraphRadiusOne) {
  EXPECT_EQ(ball(path_graph(4), 1, 1, BallMode::at_most), (std::vector<NodeId>{0, 1, 2}));
}

TEST(Ball, RadiusZeroExactlyIsCenter) {
  const auto g = random_graph(20, 40, 3);
  for (NodeId c = 0; c < 20; ++c) EXPECT_EQ(ball(g, c, 0, BallMode::exactly), std::vector<NodeId>{c});
}

TEST(Ball, FourCycleOppositeNode) {
  const auto g = cycle_graph(4);
  EXPECT_EQ(ball(g, 0, 2, BallMode::exactly), ball_oracle(g, 0, 2, BallMode::exactly));
  EXPECT_EQ(ball(g, 0, 2, BallMode::exactly), std::vector<NodeId>{2});
}

TEST(Ball, NegativeRadiusAndBadCenterThrow) {
  EXPECT_THROW(ball(path_graph(3), 0, -1, BallMode::at_most), std::invalid_argument);
  EXPECT_THROW(ball(path_graph(3), 5, 1, BallMode::at_most), std::invalid_argument);
}

TEST(Ball, NestingAndDisjointUnion) {
  const auto g = random_graph(50, 90, 5);
  for (NodeId c = 0; c < 50; c += 7) {
    for (Dist r = 0; r <= 6; ++r) {
      const auto le = ball(g, c, r, BallMode::at_most);
      const auto lt = ball(g, c, r, BallMode::less_than);
      const auto eq = ball(g, c, r, BallMode::exactly);
      EXPECT_TRUE(std::includes(le.begin(), le.end(), lt.begin(), lt.end()));
      std::vector<NodeId> merged;
      std::set_union(lt.begin(), lt.end(), eq.begin(), eq.end(), std::back_inserter(merged));
      EXPECT_EQ(merged, le);
      std::vector<NodeId> both;
      std::set_intersection(lt.begin(), lt.end(), eq.begin(), eq.end(), std::back_inserter(both));
      EXPECT_TRUE(both.empty());
      EXPECT_EQ(le, ball_oracle(g, c, r, BallMode::at_most));
    }
  }
}

TEST(ShellSizes, MatchesBalls) {
  const auto g = grid_graph(9, 9);
  const auto shells = shell_sizes(g, 40, 6);
  for (Dist r = 0; r <= 6; ++r) EXPECT_EQ(shells[static_cast<std::size_t>(r)], ball(g, 40, r, BallMode::exactly).size());
}

TEST(ShortestPath, Examples) {
  EXPECT_TRUE(is_shortest_path(path_graph(3), Path{{0, 1, 2}}));
  EXPECT_FALSE(is_shortest_path(path_graph(4), Path{{0, 1, 2, 1}}));
  EXPECT_FALSE(is_shortest_path(path_graph(4), Path{{0, 2}}));
  EXPECT_TRUE(is_shortest_path(cycle_graph(4), Path{{0, 1, 2}}));
  EXPECT_FALSE(is_shortest_path(cycle_graph(5), Path{{0, 4, 3, 2}}));
}

TEST(BoundedDistance, AgreesWithBfsWithinLimit) {
  const auto g = random_graph(60, 100, 9);
  Subgraph h(g);
  for (EdgeId e = 0; e < g.edge_count(); e += 2) h.add(e);
  for (NodeId u = 0; u < 60; u += 5) {
    const auto d = bfs_distances(h, u);
    for (NodeId v = 0; v < 60; ++v) {
      for (Dist lim : {0, 2, 5}) {
        const Dist b = bounded_distance(h, u, v, lim);
        if (reachable(d[v]) && d[v] <= lim)
          EXPECT_EQ(b, d[v]);
        else
          EXPECT_EQ(b, kUnreachable);
      }
    }
  }
}

TEST(PairSet, DedupesUpToOrientationAndValidates) {
  const NodePair raw[] = {{0, 1}, {1, 0}, {2, 3}, {0, 1}};
  const PairSet p(4, raw);
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], (NodePair{0, 1}));
  const NodePair self[] = {{2, 2}};
  EXPECT_THROW(PairSet(4, self), std::invalid_argument);
  const NodePair far[] = {{0, 4}};
  EXPECT_THROW(PairSet(4, far), std::invalid_argument);
}

TEST(Subgraph, FromEdgesRejectsForeignEdge) {
  const auto g = path_graph(4);
  const Edge ok[] = {{1, 0}};
  EXPECT_EQ(Subgraph::from_edges(g, ok).edge_count(), 1u);
  const Edge bad[] = {{0, 2}};
  EXPECT_THROW(Subgraph::from_edges(g, bad), std::invalid_argument);
}

TEST(Components, LabelsBySmallestMember) {
  const Edge edges[] = {{3, 4}, {0, 2}};
  const auto lab = component_labels(Graph::from_edges(5, edges));
  EXPECT_EQ(lab, (std::vector<std::uint32_t>{0, 1, 0, 3, 3}));
}

TEST(Io, RoundTripsGraphPairsAndNodes) {
  const auto g = random_graph(30, 50, 2);
  std::stringstream buf;
  io::write_graph(buf, g);
  const auto back = io::read_graph(buf);
  EXPECT_EQ(back.node_count(), g.node_count());
  EXPECT_TRUE(std::ranges::equal(back.edges(), g.edges()));

  const auto pairs = random_pairs(g, 10, 4);
  std::stringstream pb;
  io::write_pairs(pb, pairs);
  EXPECT_TRUE(std::ranges::equal(io::read_pairs(pb, 30).pairs(), pairs.pairs()));

  std::stringstream nb("# nodes\n5\n3 3\n\n1\n");
  EXPECT_EQ(io::read_nodes(nb, 30), (std::vector<NodeId>{1, 3, 5}));
}

TEST(Io, CommentsHeaderAndErrors) {
  std::stringstream ok("# comment\nn 6\n0 1\n  # indented comment\n4 5\n");
  const auto g = io::read_graph(ok);
  EXPECT_EQ(g.node_count(), 6u);
  EXPECT_EQ(g.edge_count(), 2u);

  std::stringstream implicit("0 1\n1 7\n");
  EXPECT_EQ(io::read_graph(implicit).node_count(), 8u);

  std::stringstream late_header("0 1\nn 5\n");
  EXPECT_THROW(io::read_graph(late_header), std::runtime_error);
  std::stringstream junk("0 x\n");
  EXPECT_THROW(io::read_graph(junk), std::runtime_error);
  std::stringstream over("n 3\n0 3\n");
  EXPECT_THROW(io::read_graph(over), std::runtime_error);
}
