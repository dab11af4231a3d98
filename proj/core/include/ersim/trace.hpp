#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ersim/packet.hpp"

namespace ersim {

enum class TraceEvent : std::uint8_t { kSend, kRecv, kDrop };

enum class DropReason : std::uint8_t {
  kNone,
  kDuplicate,
  kTtlExpired,
  kNoRoute,
  kQueueOverflow,
  kDiscoveryFailed,
  kRepairFailed,
  kLinkBreak,
  kSalvageExhausted,
  kMalformed,
  kLoop,
};
inline constexpr std::size_t kDropReasonCount = 11;

std::string_view to_string(TraceEvent event);
std::string_view to_string(DropReason reason);

struct TraceRecord {
  SimTime time{0};
  TraceEvent event = TraceEvent::kSend;
  NodeId node = 0;
  PacketKind kind = PacketKind::kData;
  NodeId src = 0;
  NodeId dst = kBroadcast;
  int ttl = 0;
  DropReason reason = DropReason::kNone;
  // Route-request identity; only meaningful for RREQ records and not part
  // of the text format.
  NodeId originator = 0;
  std::uint32_t request_id = 0;
  std::uint64_t uid = 0;
};

using TraceSink = std::function<void(const TraceRecord&)>;

// One line per record:
//   time kind node pkt_kind src dst ttl reason
// with time as fixed-width seconds to the microsecond ("%10d.%06d"), dst "*"
// for broadcasts and reason "-" when none applies. No trailing newline.
std::string format_trace_line(const TraceRecord& record);

// Inverse of format_trace_line for the text fields; nullopt on malformed input.
std::optional<TraceRecord> parse_trace_line(std::string_view line);

}  // namespace ersim
