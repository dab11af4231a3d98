#include "ersim/routing/route_table.hpp"

#include <algorithm>

namespace ersim {

namespace {

bool usable(const RouteEntry& e, SimTime now) { return e.valid && now < e.valid_until; }

}  // namespace

const RouteEntry* RouteTable::find(NodeId destination) const {
  auto it = entries_.find(destination);
  return it == entries_.end() ? nullptr : &it->second;
}

const RouteEntry* RouteTable::lookup(NodeId destination, SimTime now) const {
  const RouteEntry* e = find(destination);
  return e != nullptr && usable(*e, now) ? e : nullptr;
}

bool RouteTable::offer(const RouteEntry& candidate, SimTime now) {
  auto [it, inserted] = entries_.try_emplace(candidate.destination, candidate);
  if (inserted) return true;
  RouteEntry& held = it->second;
  const bool same_route = held.next_hop == candidate.next_hop &&
                          held.hop_count == candidate.hop_count && held.seqno == candidate.seqno;
  if (same_route && usable(held, now)) {
    held.valid_until = std::max(held.valid_until, candidate.valid_until);
    return true;
  }
  const bool fresher =
      candidate.seqno > held.seqno ||
      (candidate.seqno == held.seqno &&
       (!usable(held, now) || candidate.hop_count < held.hop_count));
  if (!fresher) return false;
  held = candidate;
  return true;
}

void RouteTable::extend(NodeId destination, SimTime until) {
  auto it = entries_.find(destination);
  if (it != entries_.end() && it->second.valid)
    it->second.valid_until = std::max(it->second.valid_until, until);
}

std::vector<RouteEntry> RouteTable::invalidate_via(NodeId next_hop, SimTime now) {
  std::vector<RouteEntry> out;
  for (auto& [dest, e] : entries_) {
    if (e.next_hop == next_hop && usable(e, now)) {
      e.valid = false;
      ++e.seqno;
      out.push_back(e);
    }
  }
  return out;
}

bool RouteTable::invalidate(NodeId destination, NodeId next_hop, std::uint32_t seqno,
                            SimTime now) {
  auto it = entries_.find(destination);
  if (it == entries_.end()) return false;
  RouteEntry& e = it->second;
  if (e.next_hop != next_hop || !usable(e, now)) return false;
  e.valid = false;
  e.seqno = std::max(e.seqno + 1, seqno);
  return true;
}

}  // namespace ersim
