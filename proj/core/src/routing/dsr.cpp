#include "ersim/routing/dsr.hpp"

#include <algorithm>

namespace ersim {

namespace {

std::ptrdiff_t index_of(const SourceRoute& route, NodeId n) {
  auto it = std::find(route.begin(), route.end(), n);
  return it == route.end() ? -1 : it - route.begin();
}

}  // namespace

DsrAgent::DsrAgent(NodeId id, Variant variant, ErsParams params, AgentOptions options,
                   Network& net)
    : RoutingAgent(id, Protocol::kDsr, variant, std::move(params), options, net),
      cache_(id, params_.tap_cache_size) {}

void DsrAgent::cache_update(const SourceRoute& route, NodeId via) {
  std::ptrdiff_t at = index_of(route, id_);
  SourceRoute ahead{id_}, behind{id_};
  if (at >= 0) {
    ahead.insert(ahead.end(), route.begin() + at + 1, route.end());
    behind.insert(behind.end(), route.rbegin() + (static_cast<std::ptrdiff_t>(route.size()) - at),
                  route.rend());
  } else {
    at = index_of(route, via);
    if (at < 0) return;
    ahead.insert(ahead.end(), route.begin() + at, route.end());
    behind.insert(behind.end(),
                  route.rbegin() + (static_cast<std::ptrdiff_t>(route.size()) - at - 1),
                  route.rend());
  }
  cache_.insert(ahead, net_.now());
  cache_.insert(behind, net_.now());
}

Packet DsrAgent::make_rreq(NodeId destination, int ttl, std::uint32_t request_id, bool repair) {
  Packet p = RoutingAgent::make_rreq(destination, ttl, request_id, repair);
  p.as<RreqBody>().path = {id_};
  p.size = control_size(p);
  return p;
}

void DsrAgent::learn_from_rreq(const RreqBody& rreq, NodeId /*from*/) {
  SourceRoute route = rreq.path;
  route.push_back(id_);
  cache_update(route);
}

void DsrAgent::extend_forwarded_rreq(RreqBody& rreq) { rreq.path.push_back(id_); }

bool DsrAgent::reply_to_rreq(const Packet& packet, NodeId /*from*/) {
  const auto& rreq = packet.as<RreqBody>();
  SourceRoute route = rreq.path;
  route.push_back(id_);
  if (rreq.target == id_) {
    send_rrep(std::move(route), false);
    return true;
  }
  auto cached = cache_.find(rreq.target);
  if (!cached) return false;
  route.insert(route.end(), cached->begin() + 1, cached->end());
  if (!valid_source_route(route)) return false;
  send_rrep(std::move(route), false);
  return true;
}

void DsrAgent::send_rrep(SourceRoute route, bool gratuitous) {
  const auto at = index_of(route, id_);
  SourceRoute back(route.rbegin() + (static_cast<std::ptrdiff_t>(route.size()) - at - 1),
                   route.rend());
  if (back.size() < 2) return;
  Packet rrep = make_control(route.front(), kDataTtl);
  RrepBody body;
  body.originator = route.front();
  body.target = route.back();
  body.hop_count = static_cast<int>(route.size()) - 1;
  body.route = std::move(route);
  body.return_path = std::move(back);
  body.cursor = 1;
  body.gratuitous = gratuitous;
  const NodeId next = body.return_path[1];
  rrep.body = std::move(body);
  rrep.size = control_size(rrep);
  net_.unicast(id_, next, std::move(rrep));
}

void DsrAgent::forward_along(Packet packet, NodeId next) {
  if (--packet.ttl <= 0) {
    net_.drop(id_, packet, DropReason::kTtlExpired);
    return;
  }
  net_.unicast(id_, next, std::move(packet));
}

void DsrAgent::handle_rrep(const Packet& packet, NodeId /*from*/) {
  const auto& rrep = packet.as<RrepBody>();
  cache_update(rrep.route);
  if (rrep.cursor + 1 >= rrep.return_path.size()) {
    route_available(rrep.target);
    return;
  }
  Packet out = packet;
  out.uid = net_.next_uid();
  auto& body = out.as<RrepBody>();
  const NodeId next = body.return_path[++body.cursor];
  forward_along(std::move(out), next);
}

void DsrAgent::send_rerr(NodeId broken_from, NodeId broken_to, const SourceRoute& back) {
  if (back.size() < 2) return;
  Packet rerr = make_control(back.back(), kDataTtl);
  RerrBody body;
  body.link_from = broken_from;
  body.link_to = broken_to;
  body.return_path = back;
  body.cursor = 1;
  rerr.body = std::move(body);
  rerr.size = control_size(rerr);
  net_.unicast(id_, back[1], std::move(rerr));
}

void DsrAgent::handle_rerr(const Packet& packet, NodeId /*from*/) {
  const auto& rerr = packet.as<RerrBody>();
  cache_.purge_link(rerr.link_from, rerr.link_to);
  if (rerr.cursor + 1 >= rerr.return_path.size()) return;
  Packet out = packet;
  out.uid = net_.next_uid();
  auto& body = out.as<RerrBody>();
  const NodeId next = body.return_path[++body.cursor];
  forward_along(std::move(out), next);
}

bool DsrAgent::has_route(NodeId destination) { return cache_.find(destination).has_value(); }

void DsrAgent::forward_data(Packet data) {
  auto& body = data.as<DataBody>();
  body.route = *cache_.find(data.dst);
  body.cursor = 1;
  const NodeId next = body.route[1];
  data.size = kDataPacketSize + 4 * static_cast<std::uint32_t>(body.route.size());
  net_.unicast(id_, next, std::move(data));
}

void DsrAgent::handle_data(Packet packet, NodeId /*from*/) {
  auto& body = packet.as<DataBody>();
  cache_update(body.route);
  if (body.cursor + 1 >= body.route.size()) {
    net_.deliver(id_, packet);
    return;
  }
  const NodeId next = body.route[++body.cursor];
  forward_along(std::move(packet), next);
}

bool DsrAgent::salvage(Packet& data) {
  auto& body = data.as<DataBody>();
  if (body.salvage_count >= params_.max_main_rexmt) return false;
  auto alt = cache_.find(data.dst);
  if (!alt) return false;
  body.route = std::move(*alt);
  body.cursor = 1;
  ++body.salvage_count;
  data.size = kDataPacketSize + 4 * static_cast<std::uint32_t>(body.route.size());
  const NodeId next = body.route[1];
  net_.unicast(id_, next, std::move(data));
  return true;
}

void DsrAgent::link_failure(NodeId next_hop, Packet packet) {
  cache_.purge_link(id_, next_hop);
  switch (packet.kind()) {
    case PacketKind::kData: {
      const auto& body = packet.as<DataBody>();
      if (packet.src == id_) {
        if (has_route(packet.dst)) {
          forward_data(std::move(packet));
        } else {
          const NodeId dst = packet.dst;
          enqueue(std::move(packet));
          initiate_discovery(dst);
        }
        return;
      }
      // The holder is at cursor - 1 in the route it was given.
      const auto at = static_cast<std::ptrdiff_t>(body.cursor) - 1;
      SourceRoute back(body.route.rbegin() + (static_cast<std::ptrdiff_t>(body.route.size()) - at - 1),
                       body.route.rend());
      send_rerr(id_, next_hop, back);
      const bool exhausted = body.salvage_count >= params_.max_main_rexmt;
      if (!salvage(packet))
        net_.drop(id_, packet, exhausted ? DropReason::kSalvageExhausted : DropReason::kLinkBreak);
      return;
    }
    default:
      net_.drop(id_, packet, DropReason::kLinkBreak);
      return;
  }
}

void DsrAgent::overhear(const Packet& packet, NodeId from) {
  switch (packet.kind()) {
    case PacketKind::kData:
      cache_update(packet.as<DataBody>().route, from);
      gratuitous_rrep(packet, from);
      break;
    case PacketKind::kRrep:
      cache_update(packet.as<RrepBody>().route, from);
      break;
    case PacketKind::kRerr: {
      const auto& rerr = packet.as<RerrBody>();
      cache_.purge_link(rerr.link_from, rerr.link_to);
      break;
    }
    default:
      break;
  }
}

bool DsrAgent::gratuitous_rrep(const Packet& packet, NodeId from) {
  const auto& body = packet.as<DataBody>();
  const auto& route = body.route;
  const auto sender = index_of(route, from);
  const auto self = index_of(route, id_);
  if (sender < 0 || self <= sender + 1) return false;
  const auto key = std::make_pair(route.front(), route.back());
  auto it = last_gratuitous_.find(key);
  if (it != last_gratuitous_.end() && net_.now() - it->second < options_.gratuitous_holdoff)
    return false;
  last_gratuitous_[key] = net_.now();
  SourceRoute shorter(route.begin(), route.begin() + sender + 1);
  shorter.insert(shorter.end(), route.begin() + self, route.end());
  send_rrep(std::move(shorter), true);
  return true;
}

}  // namespace ersim
