#include "ersim/metrics.hpp"

#include "ersim/error.hpp"

namespace ersim {

std::uint64_t MetricsRecord::control_transmissions() const {
  return transmissions_of(PacketKind::kRreq) + transmissions_of(PacketKind::kRrep) +
         transmissions_of(PacketKind::kRerr) + transmissions_of(PacketKind::kHello);
}

double compute_throughput(const MetricsRecord& m, double duration_s) {
  if (!(duration_s > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "compute_throughput: duration must be > 0");
  return static_cast<double>(m.data_bytes_delivered) * 8.0 / duration_s;
}

std::optional<double> compute_e2ed(const MetricsRecord& m) {
  if (m.delivery_times.empty()) return std::nullopt;
  std::int64_t total_us = 0;
  for (const auto& [sent, received] : m.delivery_times) total_us += (received - sent).count();
  return static_cast<double>(total_us) / 1e6 / static_cast<double>(m.delivery_times.size());
}

std::optional<double> compute_nrl(const MetricsRecord& m) {
  if (m.data_packets_delivered == 0) return std::nullopt;
  return static_cast<double>(m.control_transmissions()) /
         static_cast<double>(m.data_packets_delivered);
}

}  // namespace ersim
