#include "ersim/trace.hpp"

#include <array>
#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace ersim {

namespace {

constexpr std::array<std::string_view, kDropReasonCount> kReasonNames = {
    "-",         "duplicate",        "ttl",        "no_route",          "queue_overflow",
    "discovery_failed", "repair_failed", "link_break", "salvage_exhausted", "malformed",
    "loop",
};

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N>& names, std::string_view s) {
  for (std::size_t i = 0; i < N; ++i)
    if (names[i] == s) return static_cast<Enum>(i);
  return std::nullopt;
}

constexpr std::array<std::string_view, 3> kEventNames = {"send", "recv", "drop"};
constexpr std::array<std::string_view, kPacketKindCount> kKindNames = {"RREQ", "RREP", "RERR",
                                                                       "HELLO", "DATA"};

}  // namespace

std::string_view to_string(TraceEvent event) { return kEventNames[static_cast<int>(event)]; }
std::string_view to_string(DropReason reason) { return kReasonNames[static_cast<int>(reason)]; }

std::string format_trace_line(const TraceRecord& r) {
  const std::int64_t us = r.time.count();
  char time_field[32];
  std::snprintf(time_field, sizeof time_field, "%10" PRId64 ".%06" PRId64, us / 1000000,
                us % 1000000);
  std::ostringstream out;
  out << time_field << ' ' << to_string(r.event) << ' ' << r.node << ' ' << to_string(r.kind)
      << ' ' << r.src << ' ';
  if (r.dst == kBroadcast)
    out << '*';
  else
    out << r.dst;
  out << ' ' << r.ttl << ' ' << to_string(r.reason);
  return out.str();
}

std::optional<TraceRecord> parse_trace_line(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string time, event, kind, dst, reason;
  TraceRecord r;
  if (!(in >> time >> event >> r.node >> kind >> r.src >> dst >> r.ttl >> reason)) return std::nullopt;
  std::string extra;
  if (in >> extra) return std::nullopt;

  const auto dot = time.find('.');
  if (dot == std::string::npos || time.size() - dot - 1 != 6) return std::nullopt;
  try {
    r.time = SimTime{std::stoll(time.substr(0, dot)) * 1000000 + std::stoll(time.substr(dot + 1))};
    r.dst = dst == "*" ? kBroadcast : static_cast<NodeId>(std::stoul(dst));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const auto e = lookup<TraceEvent>(kEventNames, event);
  const auto k = lookup<PacketKind>(kKindNames, kind);
  const auto why = lookup<DropReason>(kReasonNames, reason);
  if (!e || !k || !why) return std::nullopt;
  r.event = *e;
  r.kind = *k;
  r.reason = *why;
  return r;
}

}  // namespace ersim
