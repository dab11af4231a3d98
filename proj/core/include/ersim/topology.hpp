#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <vector>

#include "ersim/analytics.hpp"

namespace ersim {

using NodeId = std::uint32_t;
inline constexpr NodeId kBroadcast = std::numeric_limits<NodeId>::max();

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double distance(Vec2 a, Vec2 b);

struct Arena {
  double width = 1000.0;
  double height = 1000.0;
  double radio_range = 250.0;

  void validate() const;
  bool contains(Vec2 p) const;
};

// Unit-disk connectivity snapshot: nodes are adjacent iff their distance is
// at most the radio range.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vec2> positions, double radio_range);

  std::size_t size() const { return positions_.size(); }
  double radio_range() const { return radio_range_; }
  Vec2 position(NodeId n) const { return positions_.at(n); }
  std::span<const Vec2> positions() const { return positions_; }
  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId n) const { return adjacency_.at(n); }
  bool adjacent(NodeId a, NodeId b) const;
  std::size_t edge_count() const;

 private:
  std::vector<Vec2> positions_;
  double radio_range_ = 0.0;
  std::vector<std::vector<NodeId>> adjacency_;
};

Graph generate_topology(std::uint64_t seed, std::size_t n, const Arena& arena);

// First connected graph drawn from (seed, attempt) for attempt = 0, 1, ...
// Throws if none is found within max_attempts.
Graph generate_connected_topology(std::uint64_t seed, std::size_t n, const Arena& arena,
                                  int max_attempts = 1000);

bool is_connected(const Graph& graph);

// Hop distance from source to every node; -1 where unreachable.
std::vector<int> hop_distances(const Graph& graph, NodeId source);

RingPopulation bfs_rings(const Graph& graph, NodeId source);

// d_f[j-1] is the mean, over nodes at hop j-1, of neighbours at hop j.
// d_f is measured out to max(max_hops, eccentricity) entries (entries past the
// eccentricity are measured zeros); d_avg averages over the eccentricity.
ConnectivityProfile connectivity_profile(const Graph& graph, NodeId source, double p_s,
                                         std::size_t max_hops = 0);

// P(i): fraction of the other N-1 nodes whose hop distance falls in
// (TTL(k_{i-1}), TTL(k_i)].
LocationDistribution location_distribution(const Graph& graph, NodeId source,
                                           const TtlSchedule& schedule);

// "id x y" per node, then "id id" per undirected edge (lower id first).
void write_topology(std::ostream& out, const Graph& graph);

}  // namespace ersim
