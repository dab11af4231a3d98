#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "ersim/error.hpp"
#include "ersim/topology.hpp"
#include "oracles.hpp"

using namespace ersim;

namespace {

// n nodes on a line, `gap` metres apart, with range 1.
Graph line(std::size_t n, double gap = 1.0) {
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({static_cast<double>(i) * gap, 0.0});
  return Graph(pts, 1.0);
}

}  // namespace

TEST(Graph, UnitDiskAdjacencyIsInclusive) {
  Graph g({{0, 0}, {250, 0}, {500.5, 0}}, 250.0);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Profile, CompleteGraphOfFive) {
  std::vector<Vec2> pts(5, Vec2{1, 1});
  const auto p = connectivity_profile(Graph(pts, 10.0), 0, 1.0);
  ASSERT_EQ(p.d_f.size(), 1u);
  EXPECT_DOUBLE_EQ(p.d_f[0], 4.0);
  EXPECT_DOUBLE_EQ(p.d_avg, 4.0);
}

TEST(Profile, PathFromAnEnd) {
  const auto p = connectivity_profile(line(4), 0, 1.0);
  EXPECT_EQ(p.d_f, (std::vector<double>{1, 1, 1}));
  EXPECT_DOUBLE_EQ(p.d_avg, 1.0);
}

TEST(Profile, IsolatedSourceAndPadding) {
  const auto p = connectivity_profile(line(3, 5.0), 0, 1.0);
  EXPECT_TRUE(p.d_f.empty());
  EXPECT_EQ(p.d_avg, 0.0);
  const auto padded = connectivity_profile(line(4), 0, 1.0, 6);
  EXPECT_EQ(padded.d_f, (std::vector<double>{1, 1, 1, 0, 0, 0}));
}

TEST(Rings, MatchFloydWarshall) {
  const Arena arena;
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = generate_topology(seed, 40, arena);
    const auto fw = oracle::all_pairs_hops(g.positions(), arena.radio_range);
    for (NodeId s : {0u, 7u, 39u}) {
      const auto d = hop_distances(g, s);
      for (NodeId v = 0; v < g.size(); ++v) EXPECT_EQ(d[v], fw[s][v]);
      EXPECT_EQ(bfs_rings(g, s).counts, oracle::ring_census(g.positions(), arena.radio_range, s));
    }
  }
}

TEST(Generation, DeterministicAndInsideArena) {
  const Arena arena{500, 300, 100};
  const Graph a = generate_topology(42, 30, arena);
  const Graph b = generate_topology(42, 30, arena);
  EXPECT_TRUE(std::equal(a.positions().begin(), a.positions().end(), b.positions().begin()));
  for (Vec2 p : a.positions()) EXPECT_TRUE(arena.contains(p));
  EXPECT_NE(generate_topology(43, 30, arena).position(0), a.position(0));
}

TEST(Generation, ConnectedRetries) {
  const Graph g = generate_connected_topology(5, 50, Arena{});
  EXPECT_TRUE(is_connected(g));
  EXPECT_THROW(generate_connected_topology(5, 50, Arena{5000, 5000, 10}, 3), Error);
}

TEST(Location, MassSumsToReachableFraction) {
  const Graph g = line(6);
  TtlSchedule s{{2, 4}, Protocol::kAodv, Variant::kErs1};
  const auto d = location_distribution(g, 0, s);
  EXPECT_EQ(d.p, (std::vector<double>{2.0 / 5, 2.0 / 5}));
  EXPECT_THROW(location_distribution(line(1), 0, s), Error);
}

TEST(Output, WritesNodesThenEdges) {
  std::ostringstream out;
  write_topology(out, line(3));
  EXPECT_EQ(out.str(), "0 0 0\n1 1 0\n2 2 0\n0 1\n1 2\n");
}
