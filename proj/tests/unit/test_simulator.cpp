#include <gtest/gtest.h>

#include "ersim/error.hpp"
#include "ersim/routing/dsr.hpp"
#include "ersim/simulator.hpp"
#include "oracles.hpp"

using namespace ersim;

namespace {

SimConfig static_config(Protocol p, std::vector<Vec2> positions, std::size_t pairs = 0) {
  SimConfig c;
  c.protocol = p;
  c.nodes = positions.size();
  c.positions = std::move(positions);
  c.v_max = 0.0;
  c.duration = 20.0;
  c.warmup = 0.0;
  c.traffic.pairs = pairs;
  return c;
}

std::vector<Vec2> chain(std::size_t n, double gap = 200.0) {
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({10.0 + gap * static_cast<double>(i), 500.0});
  return pts;
}

}  // namespace

TEST(Simulator, NoTrafficMeansOnlyHellos) {
  for (auto p : {Protocol::kAodv, Protocol::kDymo, Protocol::kDsr}) {
    const auto r = run(static_config(p, chain(5)), 1);
    EXPECT_EQ(r.metrics.data_packets_sent, 0u);
    EXPECT_EQ(r.metrics.data_packets_delivered, 0u);
    EXPECT_EQ(r.throughput, 0.0);
    EXPECT_FALSE(r.e2ed);
    const auto hellos = r.metrics.transmissions_of(PacketKind::kHello);
    EXPECT_EQ(r.metrics.control_transmissions(), hellos);
    if (p == Protocol::kDsr)
      EXPECT_EQ(hellos, 0u);
    else
      EXPECT_EQ(hellos, 5u * 20u);
  }
}

TEST(Simulator, TwoNodeFlowDeliversEverything) {
  for (auto p : {Protocol::kAodv, Protocol::kDymo, Protocol::kDsr}) {
    const auto r = run(static_config(p, chain(2), 1), 3);
    EXPECT_GT(r.metrics.data_packets_sent, 0u);
    EXPECT_EQ(r.metrics.data_packets_delivered, r.metrics.data_packets_sent);
    // Table protocols learn the neighbour from hellos before traffic starts.
    EXPECT_EQ(r.metrics.discovery_successes, p == Protocol::kDsr ? 1u : 0u);
    EXPECT_EQ(r.metrics.discovery_failures, 0u);
  }
}

TEST(Simulator, SameSeedSameMetrics) {
  SimConfig c;
  c.duration = 60.0;
  c.warmup = 10.0;
  c.protocol = Protocol::kDsr;
  const auto a = run(c, 17), b = run(c, 17);
  EXPECT_EQ(a.metrics.transmissions, b.metrics.transmissions);
  EXPECT_EQ(a.metrics.delivery_times, b.metrics.delivery_times);
  EXPECT_EQ(a.throughput, b.throughput);
  EXPECT_EQ(a.events, b.events);
  const auto other = run(c, 18);
  EXPECT_NE(a.metrics.delivery_times, other.metrics.delivery_times);
}

TEST(Simulator, SerialisationPlusProcessingDelay) {
  oracle::TraceRecorder rec;
  Simulator sim(static_config(Protocol::kAodv, chain(2), 1), 5, rec.sink());
  sim.start();
  sim.finish();
  std::map<std::uint64_t, SimTime> sent;
  bool checked = false;
  for (const auto& r : rec.records()) {
    if (r.kind != PacketKind::kData) continue;
    if (r.event == TraceEvent::kSend) sent[r.uid] = r.time;
    if (r.event == TraceEvent::kRecv) {
      EXPECT_EQ(r.time - sent.at(r.uid), 2048us + 1ms);
      checked = true;
    }
  }
  EXPECT_TRUE(checked);
}

TEST(Simulator, BroadcastReachesEachNeighbourOnce) {
  // Star: node 0 in the middle, three leaves within range, one far away.
  std::vector<Vec2> pts{{500, 500}, {600, 500}, {400, 500}, {500, 600}, {900, 900}};
  oracle::TraceRecorder rec;
  Simulator sim(static_config(Protocol::kDsr, pts), 1, rec.sink());
  sim.start(false);
  sim.run_until(1s);
  sim.agent(0).initiate_discovery(4);
  sim.run_until(1s + 20ms);
  int receptions = 0;
  for (const auto& r : rec.records())
    if (r.kind == PacketKind::kRreq && r.event == TraceEvent::kRecv) ++receptions;
  EXPECT_EQ(receptions, 3);
}

TEST(Simulator, UnicastToDepartedNeighbourSignalsBreak) {
  oracle::TraceRecorder rec;
  auto c = static_config(Protocol::kAodv, chain(3), 1);
  c.duration = 40.0;
  Simulator sim(c, 2, rec.sink());
  sim.start();
  sim.run_until(15s);
  for (NodeId n = 0; n < 3; ++n) sim.move_node(n, {10.0 + 400.0 * n, 500.0});
  sim.finish();
  bool link_break = false;
  for (const auto& r : rec.records())
    link_break = link_break || (r.event == TraceEvent::kDrop && r.reason == DropReason::kLinkBreak) ||
                 (r.event == TraceEvent::kDrop && r.reason == DropReason::kRepairFailed) ||
                 (r.event == TraceEvent::kDrop && r.reason == DropReason::kDiscoveryFailed);
  EXPECT_TRUE(link_break);
}

TEST(Simulator, DataConservation) {
  SimConfig c;
  c.duration = 80.0;
  c.warmup = 10.0;
  for (auto p : {Protocol::kAodv, Protocol::kDymo, Protocol::kDsr}) {
    c.protocol = p;
    Simulator sim(c, 9);
    sim.start();
    const auto r = sim.finish();
    EXPECT_EQ(r.metrics.data_created,
              r.metrics.data_delivered_total + r.metrics.data_dropped_total + r.data_in_flight);
    EXPECT_LE(r.metrics.data_packets_delivered, r.metrics.data_packets_sent);
  }
}

TEST(Simulator, RoutingLoadMatchesTraceRecount) {
  auto c = static_config(Protocol::kAodv, chain(5), 2);
  c.warmup = 5.0;
  for (auto p : {Protocol::kAodv, Protocol::kDymo, Protocol::kDsr}) {
    c.protocol = p;
    oracle::TraceRecorder rec(5s);
    Simulator sim(c, 4, rec.sink());
    sim.start();
    const auto r = sim.finish();
    std::uint64_t control = 0;
    for (const auto& line : rec.lines()) {
      const auto t = parse_trace_line(line);
      ASSERT_TRUE(t);
      if (t->event == TraceEvent::kSend && t->kind != PacketKind::kData && t->time >= 5s) ++control;
    }
    EXPECT_EQ(control, r.metrics.control_transmissions());
    ASSERT_TRUE(r.nrl);
    EXPECT_DOUBLE_EQ(*r.nrl, static_cast<double>(control) /
                                 static_cast<double>(r.metrics.data_packets_delivered));
  }
}

TEST(Simulator, StaleDsrRouteTriggersErrorAndPurge) {
  // 0 - 1 - 2 - 3 - 4 in a line; node 2 then moves out of everyone's range.
  auto c = static_config(Protocol::kDsr, chain(5), 0);
  oracle::TraceRecorder rec;
  Simulator sim(c, 1, rec.sink());
  sim.start(false);
  auto& src = dynamic_cast<DsrAgent&>(sim.agent(0));
  Packet p;
  p.src = 0;
  p.dst = 4;
  p.ttl = kDataTtl;
  p.size = kDataPacketSize;
  p.body = DataBody{};
  p.uid = sim.next_uid();
  sim.run_until(1s);
  src.send(p);
  sim.run_until(2s);
  ASSERT_TRUE(src.cache().find(4));
  auto& relay = dynamic_cast<DsrAgent&>(sim.agent(1));
  ASSERT_TRUE(relay.cache().find(4));

  sim.move_node(2, {500.0, 950.0});
  src.send(p);
  sim.run_until(3s);
  bool rerr = false;
  for (const auto& r : rec.records())
    rerr = rerr || (r.kind == PacketKind::kRerr && r.event == TraceEvent::kRecv && r.node == 0);
  EXPECT_TRUE(rerr);
  const auto route = relay.cache().find(4);
  EXPECT_TRUE(!route || std::find(route->begin(), route->end(), 2u) == route->end());
  const auto src_route = src.cache().find(4);
  EXPECT_TRUE(!src_route || std::find(src_route->begin(), src_route->end(), 2u) == src_route->end());
}

TEST(Simulator, ValidationNamesField) {
  SimConfig c;
  c.duration = 10;
  c.warmup = 20;
  try {
    Simulator sim(c, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kValidation);
    EXPECT_NE(std::string(e.what()).find("duration"), std::string::npos);
  }
  c = SimConfig{};
  c.agent.p_s = 1.5;
  EXPECT_THROW(Simulator(c, 1), Error);
}
