#pragma once

#include <cstdint>
#include <functional>

#include "ersim/packet.hpp"
#include "ersim/trace.hpp"

namespace ersim {

using TimerId = std::uint64_t;

// What a routing agent can ask of the world around it. The simulator
// implements this; unit tests may substitute a scripted fake.
class Network {
 public:
  virtual ~Network() = default;

  virtual SimTime now() const = 0;
  virtual std::uint64_t next_uid() = 0;

  // Link-layer broadcast to every current neighbour of `from`.
  virtual void broadcast(NodeId from, Packet packet) = 0;
  // Link-layer unicast. If next_hop is not a neighbour the packet comes back
  // through RoutingAgent::link_failure instead.
  virtual void unicast(NodeId from, NodeId next_hop, Packet packet) = 0;

  virtual TimerId schedule(Duration delay, std::function<void()> callback) = 0;
  virtual void cancel(TimerId id) = 0;

  // A DATA packet reached its destination.
  virtual void deliver(NodeId at, const Packet& data) = 0;
  virtual void drop(NodeId at, const Packet& packet, DropReason reason) = 0;

  // Uniform [0, 1) draw from the node's private stream.
  virtual double uniform(NodeId at) = 0;

  virtual void discovery_finished(NodeId at, NodeId destination, SimTime started,
                                  bool success) = 0;
};

}  // namespace ersim
