#pragma once

#include <map>
#include <vector>

#include "ersim/routing/agent.hpp"
#include "ersim/routing/route_table.hpp"

namespace ersim {

// Hop-by-hop routing with a destination-sequenced table, hello-based
// neighbour sensing and broadcast RERRs. AODV and DYMO differ only in the
// hooks they override.
class TableAgent : public RoutingAgent {
 public:
  using RoutingAgent::RoutingAgent;

  void start() override;
  void hello_tick() override;
  void link_failure(NodeId next_hop, Packet packet) override;

  const RouteTable& table() const { return table_; }
  bool is_neighbor(NodeId n) const { return neighbors_.contains(n); }

 protected:
  void handle_rrep(const Packet& packet, NodeId from) override;
  void handle_rerr(const Packet& packet, NodeId from) override;
  void handle_hello(const Packet& packet, NodeId from) override;
  void handle_data(Packet packet, NodeId from) override;
  void note_neighbor(NodeId from) override;

  void learn_from_rreq(const RreqBody& rreq, NodeId from) override;
  bool reply_to_rreq(const Packet& rreq, NodeId from) override;
  Packet make_rreq(NodeId destination, int ttl, std::uint32_t request_id, bool repair) override;
  bool has_route(NodeId destination) override;
  void forward_data(Packet data) override;

  // Whether an intermediate node may answer from its table.
  virtual bool replies_from_table() const = 0;
  // A transit DATA packet lost its next hop. Returns true if the packet was
  // taken care of (queued for repair); otherwise it is dropped.
  virtual bool try_repair(Packet& /*data*/, const RouteEntry& /*broken*/) { return false; }
  // Destinations under repair are left out of the RERR for a broken link.
  virtual bool repairing(NodeId destination) const { return discovery(destination) != nullptr; }

  void send_rrep(NodeId originator, NodeId target, std::uint32_t target_seqno, int hop_count);
  void send_rerr(const std::vector<std::pair<NodeId, std::uint32_t>>& unreachable);
  // Invalidates routes through a lost neighbour and reports them.
  std::vector<RouteEntry> break_link(NodeId neighbor);
  Duration lifetime() const { return options_.route_lifetime; }

  RouteTable table_;
  std::map<NodeId, SimTime> neighbors_;  // last heard
  // Destinations this node relayed transit DATA for, with the time.
  std::map<NodeId, SimTime> transit_;
};

}  // namespace ersim
