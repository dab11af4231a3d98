#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "ersim/time.hpp"
#include "ersim/topology.hpp"

namespace ersim {

using SourceRoute = std::vector<NodeId>;

// True if the route has at least two hops' worth of nodes and no repeats.
bool valid_source_route(const SourceRoute& route);

// DSR path cache. Every stored path starts at the owning node. Entries carry
// no timers: they leave only through FIFO eviction or a link purge.
class RouteCache {
 public:
  RouteCache(NodeId owner, std::size_t capacity);

  NodeId owner() const { return owner_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return paths_.size(); }
  std::size_t high_water() const { return high_water_; }

  // Stores the path unless it is invalid, does not start at the owner, or is
  // already present as a prefix of a stored path. Returns whether it was
  // stored.
  bool insert(const SourceRoute& path, SimTime now);

  // Shortest cached route owner..destination (newest on ties).
  std::optional<SourceRoute> find(NodeId destination) const;

  // Truncates every path at a use of the link a-b in either direction;
  // paths left shorter than two nodes are removed. Returns paths touched.
  std::size_t purge_link(NodeId a, NodeId b);

  struct Entry {
    SourceRoute path;
    SimTime inserted;
  };
  const std::deque<Entry>& entries() const { return paths_; }

 private:
  NodeId owner_;
  std::size_t capacity_;
  std::size_t high_water_ = 0;
  void index(const SourceRoute& path, std::size_t from_len, int delta);

  std::deque<Entry> paths_;  // oldest first
  // How many stored paths begin with each prefix of length >= 2.
  std::map<SourceRoute, int> prefixes_;
};

}  // namespace ersim
