#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <utility>

#include "ersim/analytics.hpp"
#include "ersim/packet.hpp"
#include "ersim/routing/network.hpp"

namespace ersim {

struct AgentOptions {
  double p_s = 1.0;                 // RREQ rebroadcast probability
  Duration route_lifetime{10s};     // AODV/DYMO entry lifetime after last use
  std::size_t queue_capacity = 64;  // per-destination, while discovery pends
  int allowed_hello_loss = 2;
  Duration gratuitous_holdoff{1s};  // DSR
};

// Progress of one expanding ring search (or AODV local repair) at the node
// that started it.
struct DiscoveryState {
  NodeId destination = 0;
  TtlSchedule schedule;
  std::size_t ring_index = 0;
  SimTime started_at{0};
  SimTime wait_deadline{0};
  std::uint32_t request_id = 0;
  TimerId timer = 0;
  bool repair = false;

  int current_ttl() const { return schedule.rings[ring_index]; }
};

// Behaviour shared by the three reactive protocols: RREQ duplicate
// suppression and TTL-limited rebroadcast, the ring-by-ring discovery state
// machine, and per-destination buffering of data awaiting a route.
class RoutingAgent {
 public:
  RoutingAgent(NodeId id, Protocol protocol, Variant variant, ErsParams params,
               AgentOptions options, Network& net);
  virtual ~RoutingAgent() = default;
  RoutingAgent(const RoutingAgent&) = delete;
  RoutingAgent& operator=(const RoutingAgent&) = delete;

  NodeId id() const { return id_; }
  Protocol protocol() const { return protocol_; }
  Variant variant() const { return variant_; }
  const ErsParams& params() const { return params_; }
  const TtlSchedule& schedule() const { return schedule_; }

  virtual void start() {}

  // Application data originating at this node.
  void send(Packet data);
  // A packet delivered to this node by the link layer.
  void receive(const Packet& packet, NodeId from);
  // A unicast between two other nodes heard in promiscuous mode.
  virtual void overhear(const Packet& /*packet*/, NodeId /*from*/) {}
  // The link layer could not reach next_hop; ownership of `packet` returns.
  virtual void link_failure(NodeId next_hop, Packet packet) = 0;

  // Starts an expanding ring search unless one is already pending for the
  // destination. Returns whether a new RREQ was emitted.
  bool initiate_discovery(NodeId destination);
  // Ring timer expiry: next ring, or failure once the schedule is exhausted.
  void handle_timeout(NodeId destination);

  // AODV only; the base implementation throws kUnsupportedFeature.
  virtual void local_repair(NodeId destination, int last_hop_count);
  // Periodic hello; a no-op for protocols without hello-based sensing.
  virtual void hello_tick() {}

  const DiscoveryState* discovery(NodeId destination) const;
  std::size_t pending_discoveries() const { return discoveries_.size(); }
  std::size_t queued_data() const;
  std::size_t queued_data(NodeId destination) const;

 protected:
  virtual void handle_rreq(const Packet& packet, NodeId from);
  virtual void handle_rrep(const Packet& packet, NodeId from) = 0;
  virtual void handle_rerr(const Packet& packet, NodeId from) = 0;
  virtual void handle_hello(const Packet& /*packet*/, NodeId /*from*/) {}
  virtual void handle_data(Packet packet, NodeId from) = 0;
  virtual void note_neighbor(NodeId /*from*/) {}

  // handle_rreq hooks.
  virtual void learn_from_rreq(const RreqBody& rreq, NodeId from) = 0;
  // Answers the request if this node can; returns true if it did.
  virtual bool reply_to_rreq(const Packet& rreq, NodeId from) = 0;
  virtual void extend_forwarded_rreq(RreqBody& /*rreq*/) {}

  virtual Packet make_rreq(NodeId destination, int ttl, std::uint32_t request_id, bool repair);
  virtual bool has_route(NodeId destination) = 0;
  // Sends a packet for which has_route() holds.
  virtual void forward_data(Packet data) = 0;
  virtual void on_discovery_failed(const DiscoveryState& /*state*/) {}

  void start_discovery(NodeId destination, TtlSchedule schedule, bool repair);
  // Called whenever a route to `destination` may have appeared; finishes a
  // pending discovery and flushes buffered data.
  void route_available(NodeId destination);
  void enqueue(Packet data);
  void drop_queue(NodeId destination, DropReason reason);

  Packet make_control(NodeId dst, int ttl) const;

  NodeId id_;
  Protocol protocol_;
  Variant variant_;
  ErsParams params_;
  AgentOptions options_;
  Network& net_;
  TtlSchedule schedule_;
  std::uint32_t request_counter_ = 0;
  std::uint32_t seqno_ = 0;

 private:
  void send_ring(DiscoveryState& state);

  std::set<std::pair<NodeId, std::uint32_t>> seen_requests_;
  std::map<NodeId, DiscoveryState> discoveries_;
  std::map<NodeId, std::deque<Packet>> queues_;
};

std::unique_ptr<RoutingAgent> make_agent(NodeId id, Protocol protocol, Variant variant,
                                         ErsParams params, AgentOptions options, Network& net);

}  // namespace ersim
