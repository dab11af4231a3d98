#include "ersim/routing/agent.hpp"

#include <algorithm>
#include <numeric>

#include "ersim/error.hpp"
#include "ersim/routing/aodv.hpp"
#include "ersim/routing/dsr.hpp"
#include "ersim/routing/dymo.hpp"

namespace ersim {

RoutingAgent::RoutingAgent(NodeId id, Protocol protocol, Variant variant, ErsParams params,
                           AgentOptions options, Network& net)
    : id_(id),
      protocol_(protocol),
      variant_(variant),
      params_(std::move(params)),
      options_(options),
      net_(net),
      schedule_(discovery_schedule(protocol, variant, params_)) {}

void RoutingAgent::send(Packet data) {
  data.src = id_;
  if (has_route(data.dst)) {
    forward_data(std::move(data));
    return;
  }
  const NodeId dst = data.dst;
  enqueue(std::move(data));
  initiate_discovery(dst);
}

void RoutingAgent::receive(const Packet& packet, NodeId from) {
  note_neighbor(from);
  switch (packet.kind()) {
    case PacketKind::kRreq: handle_rreq(packet, from); break;
    case PacketKind::kRrep: handle_rrep(packet, from); break;
    case PacketKind::kRerr: handle_rerr(packet, from); break;
    case PacketKind::kHello: handle_hello(packet, from); break;
    case PacketKind::kData: handle_data(packet, from); break;
  }
}

bool RoutingAgent::initiate_discovery(NodeId destination) {
  if (discoveries_.contains(destination)) return false;
  start_discovery(destination, schedule_, false);
  return true;
}

void RoutingAgent::start_discovery(NodeId destination, TtlSchedule schedule, bool repair) {
  DiscoveryState state;
  state.destination = destination;
  state.schedule = std::move(schedule);
  state.started_at = net_.now();
  state.repair = repair;
  auto [it, inserted] = discoveries_.emplace(destination, std::move(state));
  if (inserted) send_ring(it->second);
}

void RoutingAgent::send_ring(DiscoveryState& state) {
  state.request_id = ++request_counter_;
  seen_requests_.insert({id_, state.request_id});
  const Duration wait = ring_wait(state.schedule, state.ring_index, params_);
  state.wait_deadline = net_.now() + wait;
  const NodeId destination = state.destination;
  state.timer = net_.schedule(wait, [this, destination] { handle_timeout(destination); });
  net_.broadcast(id_, make_rreq(destination, state.current_ttl(), state.request_id, state.repair));
}

void RoutingAgent::handle_timeout(NodeId destination) {
  auto it = discoveries_.find(destination);
  if (it == discoveries_.end()) return;
  if (has_route(destination)) {
    route_available(destination);
    return;
  }
  DiscoveryState& state = it->second;
  if (++state.ring_index < state.schedule.size()) {
    send_ring(state);
    return;
  }
  const DiscoveryState finished = std::move(state);
  discoveries_.erase(it);
  if (!finished.repair) net_.discovery_finished(id_, destination, finished.started_at, false);
  drop_queue(destination,
             finished.repair ? DropReason::kRepairFailed : DropReason::kDiscoveryFailed);
  on_discovery_failed(finished);
}

void RoutingAgent::local_repair(NodeId /*destination*/, int /*last_hop_count*/) {
  throw Error(ErrorCode::kUnsupportedFeature,
              std::string("local repair is not part of ") + std::string(to_string(protocol_)));
}

void RoutingAgent::route_available(NodeId destination) {
  if (!has_route(destination)) return;
  auto it = discoveries_.find(destination);
  if (it != discoveries_.end()) {
    net_.cancel(it->second.timer);
    if (!it->second.repair) net_.discovery_finished(id_, destination, it->second.started_at, true);
    discoveries_.erase(it);
  }
  auto q = queues_.find(destination);
  if (q == queues_.end()) return;
  std::deque<Packet> pending = std::move(q->second);
  queues_.erase(q);
  for (auto& packet : pending) {
    if (has_route(destination)) {
      forward_data(std::move(packet));
    } else {
      // A send above broke the route again; keep the rest for the next search.
      enqueue(std::move(packet));
    }
  }
  if (queues_.contains(destination)) initiate_discovery(destination);
}

void RoutingAgent::enqueue(Packet data) {
  auto& q = queues_[data.dst];
  if (q.size() >= options_.queue_capacity) {
    net_.drop(id_, q.front(), DropReason::kQueueOverflow);
    q.pop_front();
  }
  q.push_back(std::move(data));
}

void RoutingAgent::drop_queue(NodeId destination, DropReason reason) {
  auto q = queues_.find(destination);
  if (q == queues_.end()) return;
  for (const auto& packet : q->second) net_.drop(id_, packet, reason);
  queues_.erase(q);
}

void RoutingAgent::handle_rreq(const Packet& packet, NodeId from) {
  const auto& rreq = packet.as<RreqBody>();
  if (packet.ttl < 0) {
    net_.drop(id_, packet, DropReason::kMalformed);
    return;
  }
  if (!seen_requests_.insert({rreq.originator, rreq.request_id}).second) {
    net_.drop(id_, packet, DropReason::kDuplicate);
    return;
  }
  if (std::find(rreq.path.begin(), rreq.path.end(), id_) != rreq.path.end()) {
    net_.drop(id_, packet, DropReason::kLoop);
    return;
  }
  learn_from_rreq(rreq, from);
  if (reply_to_rreq(packet, from)) return;

  const int remaining = packet.ttl - 1;
  if (remaining <= 0) {
    net_.drop(id_, packet, DropReason::kTtlExpired);
    return;
  }
  if (options_.p_s < 1.0 && net_.uniform(id_) >= options_.p_s) return;

  Packet forwarded = packet;
  forwarded.uid = net_.next_uid();
  forwarded.ttl = remaining;
  auto& body = forwarded.as<RreqBody>();
  ++body.hop_count;
  extend_forwarded_rreq(body);
  forwarded.size = control_size(forwarded);
  net_.broadcast(id_, std::move(forwarded));
}

Packet RoutingAgent::make_rreq(NodeId destination, int ttl, std::uint32_t request_id,
                               bool repair) {
  Packet p = make_control(destination, ttl);
  RreqBody body;
  body.originator = id_;
  body.target = destination;
  body.request_id = request_id;
  body.originator_seqno = ++seqno_;
  body.repair = repair;
  p.body = std::move(body);
  p.size = control_size(p);
  return p;
}

Packet RoutingAgent::make_control(NodeId dst, int ttl) const {
  Packet p;
  p.uid = net_.next_uid();
  p.src = id_;
  p.dst = dst;
  p.ttl = ttl;
  p.created_at = net_.now();
  return p;
}

const DiscoveryState* RoutingAgent::discovery(NodeId destination) const {
  auto it = discoveries_.find(destination);
  return it == discoveries_.end() ? nullptr : &it->second;
}

std::size_t RoutingAgent::queued_data() const {
  return std::accumulate(queues_.begin(), queues_.end(), std::size_t{0},
                         [](std::size_t n, const auto& q) { return n + q.second.size(); });
}

std::size_t RoutingAgent::queued_data(NodeId destination) const {
  auto it = queues_.find(destination);
  return it == queues_.end() ? 0 : it->second.size();
}

std::unique_ptr<RoutingAgent> make_agent(NodeId id, Protocol protocol, Variant variant,
                                         ErsParams params, AgentOptions options, Network& net) {
  switch (protocol) {
    case Protocol::kAodv:
      return std::make_unique<AodvAgent>(id, variant, std::move(params), options, net);
    case Protocol::kDymo:
      return std::make_unique<DymoAgent>(id, variant, std::move(params), options, net);
    case Protocol::kDsr:
      return std::make_unique<DsrAgent>(id, variant, std::move(params), options, net);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown protocol");
}

}  // namespace ersim
