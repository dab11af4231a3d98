#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ersim/analytics.hpp"
#include "ersim/event_queue.hpp"
#include "ersim/metrics.hpp"
#include "ersim/mobility.hpp"
#include "ersim/rng.hpp"
#include "ersim/routing/agent.hpp"
#include "ersim/routing/network.hpp"
#include "ersim/topology.hpp"
#include "ersim/trace.hpp"

namespace ersim {

struct TrafficSpec {
  std::size_t pairs = 10;
  double rate = 4.0;  // packets/s per flow
  std::uint32_t packet_size = kDataPacketSize;
  double start_window = 10.0;  // flows start uniformly in [0, start_window) s
};

struct SimConfig {
  Protocol protocol = Protocol::kAodv;
  Variant variant = Variant::kErs1;
  std::optional<ErsParams> params;  // preset for (protocol, variant) when empty

  std::size_t nodes = 50;
  Arena arena;
  double v_max = 30.0;
  double pause_time = 0.0;
  double duration = 900.0;
  double warmup = 50.0;
  TrafficSpec traffic;
  AgentOptions agent;

  double bandwidth = 2e6;  // bit/s
  Duration processing_delay{1ms};
  Duration mobility_tick{100ms};

  // Fixed initial positions; drawn from the placement stream when empty.
  std::vector<Vec2> positions;

  ErsParams effective_params() const;
  // Throws Error(kValidation) naming the offending field.
  void validate() const;
};

struct Flow {
  NodeId src = 0;
  NodeId dst = 0;
  double start = 0.0;
};

struct DiscoveryOutcome {
  NodeId at = 0;
  NodeId destination = 0;
  SimTime started{0};
  SimTime finished{0};
  bool success = false;
};

struct RunResult {
  MetricsRecord metrics;
  double throughput = 0.0;
  std::optional<double> e2ed;
  std::optional<double> nrl;
  // DATA still buffered or on a link when the run ended.
  std::uint64_t data_in_flight = 0;
  std::uint64_t events = 0;
};

class Simulator final : public Network {
 public:
  Simulator(SimConfig config, std::uint64_t seed, TraceSink sink = {});
  ~Simulator() override;

  // Starts agents, mobility and (unless disabled) the configured traffic.
  void start(bool with_traffic = true);
  void run_until(SimTime t) { queue_.run_until(t); }
  // Runs to the configured duration and summarises.
  RunResult finish();

  RoutingAgent& agent(NodeId id) { return *agents_.at(id); }
  const Graph& graph() const { return graph_; }
  const std::vector<Flow>& flows() const { return flows_; }
  const MetricsRecord& metrics() const { return metrics_; }
  // Every finished non-repair discovery, in completion order.
  const std::vector<DiscoveryOutcome>& discoveries() const { return discoveries_; }
  const SimConfig& config() const { return config_; }
  std::uint64_t data_in_flight() const;
  // Replaces a node's position and refreshes adjacency.
  void move_node(NodeId id, Vec2 position);

  // Network
  SimTime now() const override { return queue_.now(); }
  std::uint64_t next_uid() override { return ++uid_; }
  void broadcast(NodeId from, Packet packet) override;
  void unicast(NodeId from, NodeId next_hop, Packet packet) override;
  TimerId schedule(Duration delay, std::function<void()> callback) override;
  void cancel(TimerId id) override;
  void deliver(NodeId at, const Packet& data) override;
  void drop(NodeId at, const Packet& packet, DropReason reason) override;
  double uniform(NodeId at) override;
  void discovery_finished(NodeId at, NodeId destination, SimTime started, bool success) override;

 private:
  Duration tx_delay(const Packet& packet) const;
  bool in_window(SimTime t) const { return t >= warmup_; }
  void record(TraceEvent event, NodeId node, const Packet& packet, DropReason reason);
  void count_transmission(NodeId from, const Packet& packet);
  void schedule_delivery(NodeId from, NodeId to, const Packet& packet, Duration delay);
  void mobility_tick();
  void traffic_tick(std::size_t flow);

  SimConfig config_;
  ErsParams params_;
  std::uint64_t seed_;
  TraceSink sink_;
  EventQueue queue_;
  Graph graph_;
  WaypointModel model_;
  WaypointState waypoints_;
  Rng mobility_rng_;
  std::vector<Rng> node_rngs_;
  std::vector<std::unique_ptr<RoutingAgent>> agents_;
  std::vector<Flow> flows_;
  std::vector<std::uint64_t> flow_seq_;
  MetricsRecord metrics_;
  std::vector<DiscoveryOutcome> discoveries_;
  SimTime warmup_{0};
  SimTime end_{0};
  std::uint64_t uid_ = 0;
  std::uint64_t data_on_links_ = 0;
};

// Builds, runs and summarises one simulation.
RunResult run(const SimConfig& config, std::uint64_t seed, TraceSink sink = {});

}  // namespace ersim
