#include "ersim/routing/table_agent.hpp"

namespace ersim {

void TableAgent::start() {
  const auto offset = std::chrono::duration_cast<Duration>(
      params_.hello_interval * net_.uniform(id_));
  net_.schedule(offset, [this] { hello_tick(); });
}

void TableAgent::hello_tick() {
  Packet hello = make_control(kBroadcast, 1);
  hello.body = HelloBody{seqno_};
  hello.size = control_size(hello);
  net_.broadcast(id_, std::move(hello));

  const Duration allowed = params_.hello_interval * options_.allowed_hello_loss;
  std::vector<NodeId> lost;
  for (const auto& [n, heard] : neighbors_)
    if (net_.now() - heard > allowed) lost.push_back(n);
  for (NodeId n : lost) {
    neighbors_.erase(n);
    const auto broken = table_.invalidate_via(n, net_.now());
    std::vector<std::pair<NodeId, std::uint32_t>> unreachable;
    for (const auto& e : broken) {
      auto t = transit_.find(e.destination);
      const bool active = t != transit_.end() && net_.now() - t->second < lifetime();
      if (active && protocol_ == Protocol::kAodv && !repairing(e.destination)) {
        local_repair(e.destination, e.hop_count);
        continue;
      }
      unreachable.emplace_back(e.destination, e.seqno);
    }
    send_rerr(unreachable);
  }
  net_.schedule(params_.hello_interval, [this] { hello_tick(); });
}

void TableAgent::note_neighbor(NodeId from) { neighbors_[from] = net_.now(); }

void TableAgent::handle_hello(const Packet& packet, NodeId from) {
  RouteEntry e{from, from, 1, net_.now() + params_.hello_interval * options_.allowed_hello_loss,
               packet.as<HelloBody>().seqno, true};
  table_.offer(e, net_.now());
  route_available(from);
}

void TableAgent::learn_from_rreq(const RreqBody& rreq, NodeId from) {
  RouteEntry e{rreq.originator, from, rreq.hop_count + 1, net_.now() + lifetime(),
               rreq.originator_seqno, true};
  if (table_.offer(e, net_.now())) route_available(rreq.originator);
}

bool TableAgent::reply_to_rreq(const Packet& packet, NodeId /*from*/) {
  const auto& rreq = packet.as<RreqBody>();
  if (rreq.target == id_) {
    if (!rreq.unknown_seqno) seqno_ = std::max(seqno_, rreq.target_seqno);
    ++seqno_;
    send_rrep(rreq.originator, id_, seqno_, 0);
    return true;
  }
  if (!replies_from_table()) return false;
  const RouteEntry* e = table_.lookup(rreq.target, net_.now());
  if (e == nullptr || (!rreq.unknown_seqno && e->seqno < rreq.target_seqno)) return false;
  // Never answer with a route leading back through the requester.
  if (e->next_hop == rreq.originator) return false;
  send_rrep(rreq.originator, rreq.target, e->seqno, e->hop_count);
  return true;
}

void TableAgent::send_rrep(NodeId originator, NodeId target, std::uint32_t target_seqno,
                           int hop_count) {
  const RouteEntry* back = table_.lookup(originator, net_.now());
  if (back == nullptr) return;
  Packet rrep = make_control(originator, kDataTtl);
  RrepBody body;
  body.originator = originator;
  body.target = target;
  body.target_seqno = target_seqno;
  body.hop_count = hop_count;
  rrep.body = std::move(body);
  rrep.size = control_size(rrep);
  net_.unicast(id_, back->next_hop, std::move(rrep));
}

void TableAgent::handle_rrep(const Packet& packet, NodeId from) {
  const auto& rrep = packet.as<RrepBody>();
  RouteEntry e{rrep.target, from, rrep.hop_count + 1, net_.now() + lifetime(), rrep.target_seqno,
               true};
  table_.offer(e, net_.now());
  if (rrep.originator == id_) {
    route_available(rrep.target);
    return;
  }
  if (packet.ttl - 1 <= 0) {
    net_.drop(id_, packet, DropReason::kTtlExpired);
    return;
  }
  const RouteEntry* back = table_.lookup(rrep.originator, net_.now());
  if (back == nullptr) {
    net_.drop(id_, packet, DropReason::kNoRoute);
    return;
  }
  Packet out = packet;
  out.uid = net_.next_uid();
  out.ttl = packet.ttl - 1;
  ++out.as<RrepBody>().hop_count;
  net_.unicast(id_, back->next_hop, std::move(out));
  route_available(rrep.target);
}

void TableAgent::send_rerr(const std::vector<std::pair<NodeId, std::uint32_t>>& unreachable) {
  if (unreachable.empty()) return;
  Packet rerr = make_control(kBroadcast, 1);
  RerrBody body;
  body.unreachable = unreachable;
  rerr.body = std::move(body);
  rerr.size = control_size(rerr);
  net_.broadcast(id_, std::move(rerr));
}

void TableAgent::handle_rerr(const Packet& packet, NodeId from) {
  std::vector<std::pair<NodeId, std::uint32_t>> propagate;
  for (const auto& [dest, seqno] : packet.as<RerrBody>().unreachable) {
    if (table_.invalidate(dest, from, seqno, net_.now())) propagate.emplace_back(dest, seqno);
  }
  send_rerr(propagate);
}

std::vector<RouteEntry> TableAgent::break_link(NodeId neighbor) {
  neighbors_.erase(neighbor);
  return table_.invalidate_via(neighbor, net_.now());
}

Packet TableAgent::make_rreq(NodeId destination, int ttl, std::uint32_t request_id, bool repair) {
  Packet p = RoutingAgent::make_rreq(destination, ttl, request_id, repair);
  if (const RouteEntry* e = table_.find(destination)) {
    auto& body = p.as<RreqBody>();
    body.target_seqno = e->seqno;
    body.unknown_seqno = false;
  }
  return p;
}

bool TableAgent::has_route(NodeId destination) {
  return table_.lookup(destination, net_.now()) != nullptr;
}

void TableAgent::forward_data(Packet data) {
  const RouteEntry* e = table_.lookup(data.dst, net_.now());
  table_.extend(data.dst, net_.now() + lifetime());
  net_.unicast(id_, e->next_hop, std::move(data));
}

void TableAgent::handle_data(Packet packet, NodeId from) {
  if (packet.dst == id_) {
    net_.deliver(id_, packet);
    table_.extend(packet.src, net_.now() + lifetime());
    return;
  }
  if (--packet.ttl <= 0) {
    net_.drop(id_, packet, DropReason::kTtlExpired);
    return;
  }
  table_.extend(from, net_.now() + lifetime());
  transit_[packet.dst] = net_.now();
  if (has_route(packet.dst)) {
    forward_data(std::move(packet));
    return;
  }
  if (discovery(packet.dst) != nullptr) {
    enqueue(std::move(packet));
    return;
  }
  const RouteEntry* stale = table_.find(packet.dst);
  std::uint32_t seqno = stale != nullptr ? stale->seqno : 0;
  net_.drop(id_, packet, DropReason::kNoRoute);
  send_rerr({{packet.dst, seqno}});
}

void TableAgent::link_failure(NodeId next_hop, Packet packet) {
  const NodeId dst = packet.dst;
  const RouteEntry* before = table_.find(dst);
  const RouteEntry broken = before != nullptr ? *before : RouteEntry{dst, next_hop, 1};
  auto invalidated = break_link(next_hop);

  bool handled = false;
  if (packet.kind() == PacketKind::kData) {
    if (packet.src == id_) {
      enqueue(std::move(packet));
      initiate_discovery(dst);
      handled = true;
    } else {
      handled = try_repair(packet, broken);
    }
  }
  if (!handled) net_.drop(id_, packet, DropReason::kLinkBreak);

  std::vector<std::pair<NodeId, std::uint32_t>> unreachable;
  for (const auto& e : invalidated)
    if (!repairing(e.destination)) unreachable.emplace_back(e.destination, e.seqno);
  send_rerr(unreachable);
}

}  // namespace ersim
