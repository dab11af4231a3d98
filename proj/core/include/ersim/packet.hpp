#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "ersim/time.hpp"
#include "ersim/topology.hpp"

namespace ersim {

enum class PacketKind : std::uint8_t { kRreq, kRrep, kRerr, kHello, kData };
inline constexpr std::size_t kPacketKindCount = 5;

std::string_view to_string(PacketKind kind);

struct RreqBody {
  NodeId originator = 0;
  NodeId target = 0;
  std::uint32_t request_id = 0;
  std::uint32_t originator_seqno = 0;
  std::uint32_t target_seqno = 0;
  bool unknown_seqno = true;
  int hop_count = 0;
  // DSR: accumulated route starting at the originator.
  std::vector<NodeId> path;
  bool repair = false;
};

struct RrepBody {
  NodeId originator = 0;  // node that asked
  NodeId target = 0;      // node the route leads to
  std::uint32_t target_seqno = 0;
  int hop_count = 0;
  // DSR: discovered route originator..target, and the source route the
  // reply travels along (replier..originator).
  std::vector<NodeId> route;
  std::vector<NodeId> return_path;
  std::size_t cursor = 0;
  bool gratuitous = false;
};

struct RerrBody {
  // AODV/DYMO: destinations no longer reachable through the sender.
  std::vector<std::pair<NodeId, std::uint32_t>> unreachable;
  // DSR: the broken link and the source route back to the data source.
  NodeId link_from = 0;
  NodeId link_to = 0;
  std::vector<NodeId> return_path;
  std::size_t cursor = 0;
};

struct HelloBody {
  std::uint32_t seqno = 0;
};

struct DataBody {
  std::uint32_t flow = 0;
  std::uint64_t seq = 0;
  // DSR source route and the index of the current holder.
  std::vector<NodeId> route;
  std::size_t cursor = 0;
  int salvage_count = 0;
};

struct Packet {
  std::uint64_t uid = 0;
  std::uint32_t size = 0;  // bytes
  NodeId src = 0;
  NodeId dst = kBroadcast;
  int ttl = 0;
  SimTime created_at{0};
  std::variant<RreqBody, RrepBody, RerrBody, HelloBody, DataBody> body;

  PacketKind kind() const { return static_cast<PacketKind>(body.index()); }
  bool is_control() const { return kind() != PacketKind::kData; }

  template <typename T>
  T& as() { return std::get<T>(body); }
  template <typename T>
  const T& as() const { return std::get<T>(body); }
};

inline constexpr std::uint32_t kDataPacketSize = 512;
inline constexpr int kDataTtl = 64;
inline constexpr std::uint32_t kIpHeaderSize = 20;

// Wire sizes of control packets (IP header included). DSR headers grow by
// four bytes per address carried.
std::uint32_t control_size(const Packet& packet);

}  // namespace ersim
