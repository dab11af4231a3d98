#include "ersim/packet.hpp"

namespace ersim {

std::string_view to_string(PacketKind kind) {
  switch (kind) {
    case PacketKind::kRreq: return "RREQ";
    case PacketKind::kRrep: return "RREP";
    case PacketKind::kRerr: return "RERR";
    case PacketKind::kHello: return "HELLO";
    case PacketKind::kData: return "DATA";
  }
  return "?";
}

std::uint32_t control_size(const Packet& packet) {
  auto addresses = [](std::size_t n) { return static_cast<std::uint32_t>(4 * n); };
  switch (packet.kind()) {
    case PacketKind::kRreq: {
      const auto& b = packet.as<RreqBody>();
      return kIpHeaderSize + 24 + addresses(b.path.size());
    }
    case PacketKind::kRrep: {
      const auto& b = packet.as<RrepBody>();
      return kIpHeaderSize + 20 + addresses(b.route.size() + b.return_path.size());
    }
    case PacketKind::kRerr: {
      const auto& b = packet.as<RerrBody>();
      return kIpHeaderSize + 12 + addresses(2 * b.unreachable.size() + b.return_path.size());
    }
    case PacketKind::kHello: return kIpHeaderSize + 20;
    case PacketKind::kData: return packet.size;
  }
  return packet.size;
}

}  // namespace ersim
