#include "ersim/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <ostream>
#include <string>

#include "ersim/error.hpp"
#include "ersim/rng.hpp"

namespace ersim {

namespace {

void check_source(const Graph& graph, NodeId source) {
  if (source >= graph.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "source " + std::to_string(source) + " is not a node of a " +
                    std::to_string(graph.size()) + "-node graph");
  }
}

}  // namespace

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

void Arena::validate() const {
  if (!(width > 0.0)) throw Error(ErrorCode::kInvalidArgument, "arena width must be > 0");
  if (!(height > 0.0)) throw Error(ErrorCode::kInvalidArgument, "arena height must be > 0");
  if (!(radio_range > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "arena radio_range must be > 0");
}

bool Arena::contains(Vec2 p) const {
  return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
}

Graph::Graph(std::vector<Vec2> positions, double radio_range)
    : positions_(std::move(positions)), radio_range_(radio_range), adjacency_(positions_.size()) {
  const double r2 = radio_range * radio_range;
  for (NodeId a = 0; a < positions_.size(); ++a) {
    for (NodeId b = a + 1; b < positions_.size(); ++b) {
      const double dx = positions_[a].x - positions_[b].x;
      const double dy = positions_[a].y - positions_[b].y;
      if (dx * dx + dy * dy <= r2) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
      }
    }
  }
  // Pairs are visited in ascending order, so each list is already sorted.
}

bool Graph::adjacent(NodeId a, NodeId b) const {
  if (a >= size() || b >= size()) return false;
  const auto& n = adjacency_[a];
  return std::binary_search(n.begin(), n.end(), b);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& n : adjacency_) twice += n.size();
  return twice / 2;
}

Graph generate_topology(std::uint64_t seed, std::size_t n, const Arena& arena) {
  arena.validate();
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "topology needs at least one node");
  Rng rng(seed, Stream::kPlacement);
  std::vector<Vec2> positions(n);
  for (auto& p : positions) {
    p.x = rng.uniform(0.0, arena.width);
    p.y = rng.uniform(0.0, arena.height);
  }
  return Graph(std::move(positions), arena.radio_range);
}

Graph generate_connected_topology(std::uint64_t seed, std::size_t n, const Arena& arena,
                                  int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Distinct sub-seed per attempt; attempt 0 reproduces generate_topology(seed).
    const std::uint64_t sub = seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ull;
    Graph g = generate_topology(sub, n, arena);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no connected topology found in " + std::to_string(max_attempts) + " attempts");
}

bool is_connected(const Graph& graph) {
  if (graph.size() == 0) return true;
  const auto dist = hop_distances(graph, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> hop_distances(const Graph& graph, NodeId source) {
  check_source(graph, source);
  std::vector<int> dist(graph.size(), -1);
  std::deque<NodeId> frontier{source};
  dist[source] = 0;
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (NodeId v : graph.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push_back(v);
      }
    }
  }
  return dist;
}

RingPopulation bfs_rings(const Graph& graph, NodeId source) {
  RingPopulation rings;
  for (int d : hop_distances(graph, source)) {
    if (d <= 0) continue;
    if (rings.counts.size() < static_cast<std::size_t>(d)) rings.counts.resize(d, 0);
    ++rings.counts[d - 1];
  }
  return rings;
}

ConnectivityProfile connectivity_profile(const Graph& graph, NodeId source, double p_s,
                                         std::size_t max_hops) {
  const auto dist = hop_distances(graph, source);
  const std::size_t ecc =
      static_cast<std::size_t>(std::max(0, *std::max_element(dist.begin(), dist.end())));

  // parents[j] counts nodes at hop j, links[j] the edges from hop j to hop j+1.
  std::vector<double> parents(ecc + 1, 0.0);
  std::vector<double> links(ecc + 1, 0.0);
  for (NodeId u = 0; u < graph.size(); ++u) {
    if (dist[u] < 0) continue;
    ++parents[dist[u]];
    for (NodeId v : graph.neighbors(u))
      if (dist[v] == dist[u] + 1) ++links[dist[u]];
  }

  ConnectivityProfile profile;
  profile.p_s = p_s;
  profile.d_f.assign(std::max(max_hops, ecc), 0.0);
  for (std::size_t j = 1; j <= ecc; ++j) profile.d_f[j - 1] = links[j - 1] / parents[j - 1];
  profile.d_avg = ecc == 0 ? 0.0 : avg_degree(profile.d_f, DegreeMode::kFlooding, ecc);
  return profile;
}

LocationDistribution location_distribution(const Graph& graph, NodeId source,
                                           const TtlSchedule& schedule) {
  check_source(graph, source);
  if (graph.size() < 2) {
    throw Error(ErrorCode::kUndefinedDistribution,
                "location distribution needs at least one other node");
  }
  if (schedule.empty()) throw Error(ErrorCode::kInvalidSchedule, "empty schedule");
  const auto dist = hop_distances(graph, source);
  const double others = static_cast<double>(graph.size() - 1);
  std::vector<std::size_t> found(schedule.size(), 0);
  for (NodeId v = 0; v < graph.size(); ++v) {
    if (v == source || dist[v] < 0) continue;
    int previous = 0;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      if (dist[v] > previous && dist[v] <= schedule.rings[i]) {
        ++found[i];
        break;
      }
      previous = std::max(previous, schedule.rings[i]);
    }
  }
  LocationDistribution out;
  for (std::size_t count : found) out.p.push_back(static_cast<double>(count) / others);
  return out;
}

void write_topology(std::ostream& out, const Graph& graph) {
  for (NodeId n = 0; n < graph.size(); ++n) {
    const Vec2 p = graph.position(n);
    out << n << ' ' << p.x << ' ' << p.y << '\n';
  }
  for (NodeId a = 0; a < graph.size(); ++a)
    for (NodeId b : graph.neighbors(a))
      if (a < b) out << a << ' ' << b << '\n';
}

}  // namespace ersim
