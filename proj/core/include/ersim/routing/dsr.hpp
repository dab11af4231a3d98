#pragma once

#include <map>
#include <utility>

#include "ersim/routing/agent.hpp"
#include "ersim/routing/route_cache.hpp"

namespace ersim {

// DSR with a path cache fed by forwarded and overheard source routes,
// replies from cache, packet salvaging and gratuitous replies.
class DsrAgent : public RoutingAgent {
 public:
  DsrAgent(NodeId id, Variant variant, ErsParams params, AgentOptions options, Network& net);

  void overhear(const Packet& packet, NodeId from) override;
  void link_failure(NodeId next_hop, Packet packet) override;

  const RouteCache& cache() const { return cache_; }

  // Learns the sub-paths of `route` usable from this node: the part after
  // it and the reversed part before it. `via` is a neighbour heard
  // transmitting when this node is not itself on the route.
  void cache_update(const SourceRoute& route, NodeId via = kBroadcast);
  // Reroutes a DATA packet around a broken link from the cache. Returns
  // false, leaving the packet untouched, when no alternative exists or the
  // salvage budget is spent.
  bool salvage(Packet& data);
  // Sends a shortened route to the source if the overheard source route
  // passes through this node further downstream than the next hop.
  bool gratuitous_rrep(const Packet& packet, NodeId from);

 protected:
  void handle_rrep(const Packet& packet, NodeId from) override;
  void handle_rerr(const Packet& packet, NodeId from) override;
  void handle_data(Packet packet, NodeId from) override;

  void learn_from_rreq(const RreqBody& rreq, NodeId from) override;
  bool reply_to_rreq(const Packet& rreq, NodeId from) override;
  void extend_forwarded_rreq(RreqBody& rreq) override;
  Packet make_rreq(NodeId destination, int ttl, std::uint32_t request_id, bool repair) override;
  bool has_route(NodeId destination) override;
  void forward_data(Packet data) override;

 private:
  void send_rrep(SourceRoute route, bool gratuitous);
  void send_rerr(NodeId broken_from, NodeId broken_to, const SourceRoute& back_to_source);
  // TTL-checked unicast of a source-routed packet whose cursor has already
  // been advanced to `next`.
  void forward_along(Packet packet, NodeId next);

  RouteCache cache_;
  std::map<std::pair<NodeId, NodeId>, SimTime> last_gratuitous_;
};

}  // namespace ersim
