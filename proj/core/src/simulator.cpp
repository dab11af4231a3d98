#include "ersim/simulator.hpp"

#include <cmath>
#include <string>

#include "ersim/error.hpp"

namespace ersim {

namespace {

void require(bool ok, const char* field, const std::string& why) {
  if (!ok) throw Error(ErrorCode::kValidation, std::string(field) + ": " + why);
}

}  // namespace

ErsParams SimConfig::effective_params() const {
  return params ? *params : ErsParams::preset(protocol, variant);
}

void SimConfig::validate() const {
  require(nodes >= 1, "nodes", "must be >= 1");
  require(arena.width > 0 && arena.height > 0, "arena", "dimensions must be > 0");
  require(arena.radio_range > 0, "radio_range", "must be > 0");
  require(v_max >= 0 && std::isfinite(v_max), "v_max", "must be >= 0");
  require(pause_time >= 0, "pause_time", "must be >= 0");
  require(warmup >= 0, "warmup", "must be >= 0");
  require(duration > warmup, "duration", "must exceed warmup");
  require(traffic.pairs == 0 || nodes >= 2, "traffic_pairs", "flows need at least two nodes");
  require(traffic.rate > 0, "traffic_rate", "must be > 0");
  require(traffic.packet_size > 0, "packet_size", "must be > 0");
  require(traffic.start_window >= 0, "traffic_start_window", "must be >= 0");
  require(agent.p_s >= 0 && agent.p_s <= 1, "p_s", "must lie in [0, 1]");
  require(agent.queue_capacity >= 1, "queue_capacity", "must be >= 1");
  require(bandwidth > 0, "bandwidth", "must be > 0");
  require(mobility_tick > Duration::zero(), "mobility_tick", "must be > 0");
  require(positions.empty() || positions.size() == nodes, "positions",
          "must list one position per node");
  try {
    effective_params().validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidation, e.what());
  }
}

Simulator::Simulator(SimConfig config, std::uint64_t seed, TraceSink sink)
    : config_(std::move(config)),
      params_(config_.effective_params()),
      seed_(seed),
      sink_(std::move(sink)),
      mobility_rng_(seed, Stream::kMobility) {
  config_.validate();
  std::vector<Vec2> positions = config_.positions;
  if (positions.empty()) {
    const Graph placed = generate_topology(seed, config_.nodes, config_.arena);
    positions.assign(placed.positions().begin(), placed.positions().end());
  }
  model_ = WaypointModel{config_.arena, config_.pause_time, config_.v_max};
  waypoints_ = initial_waypoint_state(positions, model_);
  graph_ = Graph(std::move(positions), config_.arena.radio_range);
  warmup_ = from_seconds(config_.warmup);
  end_ = from_seconds(config_.duration);

  node_rngs_.reserve(config_.nodes);
  agents_.reserve(config_.nodes);
  for (NodeId n = 0; n < config_.nodes; ++n) {
    node_rngs_.emplace_back(seed, Stream::kNode, n);
    agents_.push_back(
        make_agent(n, config_.protocol, config_.variant, params_, config_.agent, *this));
  }
}

Simulator::~Simulator() = default;

void Simulator::start(bool with_traffic) {
  for (auto& a : agents_) a->start();
  if (config_.v_max > 0)
    queue_.schedule_in(config_.mobility_tick, EventKind::kMobilityTick, [this] { mobility_tick(); });
  if (!with_traffic) return;

  Rng traffic(seed_, Stream::kTraffic);
  const auto n = static_cast<std::uint64_t>(config_.nodes);
  for (std::size_t f = 0; f < config_.traffic.pairs; ++f) {
    Flow flow;
    flow.src = static_cast<NodeId>(traffic.below(n));
    flow.dst = static_cast<NodeId>(traffic.below(n - 1));
    if (flow.dst >= flow.src) ++flow.dst;
    flow.start = traffic.uniform() * config_.traffic.start_window;
    flows_.push_back(flow);
    flow_seq_.push_back(0);
    queue_.schedule(from_seconds(flow.start), EventKind::kTrafficTick, [this, f] { traffic_tick(f); });
  }
}

void Simulator::traffic_tick(std::size_t f) {
  const Flow& flow = flows_[f];
  Packet data;
  data.uid = next_uid();
  data.size = config_.traffic.packet_size;
  data.src = flow.src;
  data.dst = flow.dst;
  data.ttl = kDataTtl;
  data.created_at = now();
  data.body = DataBody{static_cast<std::uint32_t>(f), flow_seq_[f]++};
  ++metrics_.data_created;
  if (in_window(now())) ++metrics_.data_packets_sent;
  agents_[flow.src]->send(std::move(data));

  const SimTime next =
      from_seconds(flow.start + static_cast<double>(flow_seq_[f]) / config_.traffic.rate);
  if (next < end_) queue_.schedule(next, EventKind::kTrafficTick, [this, f] { traffic_tick(f); });
}

void Simulator::mobility_tick() {
  waypoints_ = waypoint_step(std::move(waypoints_), to_seconds(config_.mobility_tick), model_,
                             mobility_rng_);
  graph_ = Graph(positions_of(waypoints_), config_.arena.radio_range);
  queue_.schedule_in(config_.mobility_tick, EventKind::kMobilityTick, [this] { mobility_tick(); });
}

void Simulator::move_node(NodeId id, Vec2 position) {
  waypoints_.nodes.at(id).position = position;
  waypoints_.nodes.at(id).waypoint = position;
  graph_ = Graph(positions_of(waypoints_), config_.arena.radio_range);
}

Duration Simulator::tx_delay(const Packet& packet) const {
  const double us = std::ceil(packet.size * 8.0 / config_.bandwidth * 1e6);
  return Duration(static_cast<Duration::rep>(us));
}

void Simulator::record(TraceEvent event, NodeId node, const Packet& packet, DropReason reason) {
  if (!sink_) return;
  TraceRecord r;
  r.time = now();
  r.event = event;
  r.node = node;
  r.kind = packet.kind();
  r.src = packet.src;
  r.dst = packet.dst;
  r.ttl = packet.ttl;
  r.reason = reason;
  r.uid = packet.uid;
  if (packet.kind() == PacketKind::kRreq) {
    r.originator = packet.as<RreqBody>().originator;
    r.request_id = packet.as<RreqBody>().request_id;
  }
  sink_(r);
}

void Simulator::count_transmission(NodeId from, const Packet& packet) {
  if (in_window(now())) ++metrics_.transmissions[static_cast<std::size_t>(packet.kind())];
  record(TraceEvent::kSend, from, packet, DropReason::kNone);
}

void Simulator::schedule_delivery(NodeId from, NodeId to, const Packet& packet, Duration delay) {
  if (packet.kind() == PacketKind::kData) ++data_on_links_;
  queue_.schedule_in(delay, EventKind::kPacketDelivery, [this, from, to, packet] {
    if (packet.kind() == PacketKind::kData) --data_on_links_;
    record(TraceEvent::kRecv, to, packet, DropReason::kNone);
    agents_[to]->receive(packet, from);
  });
}

void Simulator::broadcast(NodeId from, Packet packet) {
  count_transmission(from, packet);
  const Duration delay = tx_delay(packet) + config_.processing_delay;
  for (NodeId n : graph_.neighbors(from)) schedule_delivery(from, n, packet, delay);
}

void Simulator::unicast(NodeId from, NodeId next_hop, Packet packet) {
  count_transmission(from, packet);
  const Duration tx = tx_delay(packet);
  if (next_hop >= agents_.size() || !graph_.adjacent(from, next_hop)) {
    if (packet.kind() == PacketKind::kData) ++data_on_links_;
    queue_.schedule_in(tx, EventKind::kPacketDelivery,
                       [this, from, next_hop, p = std::move(packet)]() mutable {
                         if (p.kind() == PacketKind::kData) --data_on_links_;
                         agents_[from]->link_failure(next_hop, std::move(p));
                       });
    return;
  }
  const Duration delay = tx + config_.processing_delay;
  if (config_.protocol == Protocol::kDsr) {
    for (NodeId n : graph_.neighbors(from)) {
      if (n == next_hop) continue;
      queue_.schedule_in(delay, EventKind::kPacketDelivery,
                         [this, from, n, packet] { agents_[n]->overhear(packet, from); });
    }
  }
  schedule_delivery(from, next_hop, packet, delay);
}

TimerId Simulator::schedule(Duration delay, std::function<void()> callback) {
  return queue_.schedule_in(delay, EventKind::kTimer, std::move(callback));
}

void Simulator::cancel(TimerId id) { queue_.cancel(id); }

void Simulator::deliver(NodeId /*at*/, const Packet& data) {
  ++metrics_.data_delivered_total;
  if (!in_window(data.created_at)) return;
  ++metrics_.data_packets_delivered;
  metrics_.data_bytes_delivered += config_.traffic.packet_size;
  metrics_.delivery_times.emplace_back(data.created_at, now());
}

void Simulator::drop(NodeId at, const Packet& packet, DropReason reason) {
  record(TraceEvent::kDrop, at, packet, reason);
  if (packet.kind() != PacketKind::kData) return;
  ++metrics_.data_dropped_total;
  if (in_window(packet.created_at)) ++metrics_.data_drops[static_cast<std::size_t>(reason)];
}

double Simulator::uniform(NodeId at) { return node_rngs_.at(at).uniform(); }

void Simulator::discovery_finished(NodeId at, NodeId destination, SimTime started,
                                   bool success) {
  discoveries_.push_back({at, destination, started, now(), success});
  if (!in_window(now())) return;
  ++(success ? metrics_.discovery_successes : metrics_.discovery_failures);
}

std::uint64_t Simulator::data_in_flight() const {
  std::uint64_t queued = 0;
  for (const auto& a : agents_) queued += a->queued_data();
  return queued + data_on_links_;
}

RunResult Simulator::finish() {
  queue_.run_until(end_);
  RunResult r;
  r.metrics = metrics_;
  r.throughput = compute_throughput(metrics_, config_.duration - config_.warmup);
  r.e2ed = compute_e2ed(metrics_);
  r.nrl = compute_nrl(metrics_);
  r.data_in_flight = data_in_flight();
  r.events = queue_.executed();
  return r;
}

RunResult run(const SimConfig& config, std::uint64_t seed, TraceSink sink) {
  Simulator sim(config, seed, std::move(sink));
  sim.start();
  return sim.finish();
}

}  // namespace ersim
