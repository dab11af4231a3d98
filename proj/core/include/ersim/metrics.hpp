#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ersim/packet.hpp"
#include "ersim/trace.hpp"

namespace ersim {

struct MetricsRecord {
  // Measurement window: DATA created at or after warm-up, control packets
  // transmitted at or after warm-up.
  std::uint64_t data_packets_sent = 0;
  std::uint64_t data_packets_delivered = 0;
  std::uint64_t data_bytes_delivered = 0;
  // (sent, received) for each delivered packet in the window.
  std::vector<std::pair<SimTime, SimTime>> delivery_times;
  // Per-hop transmissions by kind; the DATA slot counts data hops.
  std::array<std::uint64_t, kPacketKindCount> transmissions{};
  std::array<std::uint64_t, kDropReasonCount> data_drops{};
  std::uint64_t discovery_successes = 0;
  std::uint64_t discovery_failures = 0;

  // Whole-run DATA accounting for conservation checks.
  std::uint64_t data_created = 0;
  std::uint64_t data_delivered_total = 0;
  std::uint64_t data_dropped_total = 0;

  std::uint64_t control_transmissions() const;
  std::uint64_t transmissions_of(PacketKind kind) const {
    return transmissions[static_cast<std::size_t>(kind)];
  }
};

// Bits per second of DATA payload delivered over `duration_s`.
double compute_throughput(const MetricsRecord& m, double duration_s);

// Mean DATA end-to-end delay in seconds; nullopt when nothing was delivered.
std::optional<double> compute_e2ed(const MetricsRecord& m);

// Control transmissions (RREQ, RREP, RERR, HELLO; per hop) per delivered
// DATA packet; nullopt when nothing was delivered.
std::optional<double> compute_nrl(const MetricsRecord& m);

}  // namespace ersim
