#include "ersim/routing/aodv.hpp"

namespace ersim {

void AodvAgent::local_repair(NodeId destination, int last_hop_count) {
  if (discovery(destination) != nullptr) return;
  TtlSchedule repair{{last_hop_count + params_.local_add_ttl}, protocol_, variant_};
  start_discovery(destination, std::move(repair), true);
}

bool AodvAgent::try_repair(Packet& data, const RouteEntry& broken) {
  const NodeId dst = data.dst;
  enqueue(std::move(data));
  local_repair(dst, broken.hop_count);
  return true;
}

void AodvAgent::on_discovery_failed(const DiscoveryState& state) {
  if (!state.repair) return;
  const RouteEntry* e = table_.find(state.destination);
  send_rerr({{state.destination, e != nullptr ? e->seqno : 0}});
}

}  // namespace ersim
