#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ersim/time.hpp"
#include "ersim/topology.hpp"

namespace ersim {

struct RouteEntry {
  NodeId destination = 0;
  NodeId next_hop = 0;
  int hop_count = 1;
  SimTime valid_until{0};
  std::uint32_t seqno = 0;
  bool valid = true;
};

// Distance-vector table with destination sequence numbers deciding
// freshness.
class RouteTable {
 public:
  // Any entry, valid or not.
  const RouteEntry* find(NodeId destination) const;
  // Entry usable for forwarding at `now`: valid and now < valid_until.
  const RouteEntry* lookup(NodeId destination, SimTime now) const;

  // Installs the candidate if it is fresher than what is held: a newer
  // sequence number, or the same one with a shorter path or replacing an
  // unusable entry. An identical route just has its lifetime extended.
  bool offer(const RouteEntry& candidate, SimTime now);

  void extend(NodeId destination, SimTime until);

  // Invalidates every usable route through next_hop, bumping each sequence
  // number, and returns the invalidated entries.
  std::vector<RouteEntry> invalidate_via(NodeId next_hop, SimTime now);
  // Invalidates one route if it is usable and goes through next_hop.
  bool invalidate(NodeId destination, NodeId next_hop, std::uint32_t seqno, SimTime now);

  std::size_t size() const { return entries_.size(); }

 private:
  std::map<NodeId, RouteEntry> entries_;
};

}  // namespace ersim
