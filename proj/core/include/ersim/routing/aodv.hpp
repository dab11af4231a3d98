#pragma once

#include "ersim/routing/table_agent.hpp"

namespace ersim {

// AODV: intermediate nodes answer from fresh table entries, and a node
// upstream of a broken link attempts a bounded local repair before
// reporting the destination unreachable.
class AodvAgent : public TableAgent {
 public:
  AodvAgent(NodeId id, Variant variant, ErsParams params, AgentOptions options, Network& net)
      : TableAgent(id, Protocol::kAodv, variant, std::move(params), options, net) {}

  // Single-ring search with TTL = last_hop_count + LOCAL_ADD_TTL.
  void local_repair(NodeId destination, int last_hop_count) override;

 protected:
  bool replies_from_table() const override { return true; }
  bool try_repair(Packet& data, const RouteEntry& broken) override;
  void on_discovery_failed(const DiscoveryState& state) override;
};

}  // namespace ersim
