#include "ersim/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "ersim/error.hpp"

namespace ersim {

bool cell_less(const ResultRow& a, const ResultRow& b) {
  return std::tie(a.protocol, a.variant, a.pause_time, a.seed) <
         std::tie(b.protocol, b.variant, b.pause_time, b.seed);
}

ResultRow run_cell(const ScenarioConfig& config, Protocol protocol, Variant variant, double pause,
                   std::uint64_t seed, TraceSink sink) {
  ResultRow row;
  row.protocol = protocol;
  row.variant = variant;
  row.pause_time = pause;
  row.seed = seed;
  const SimConfig sim_config = config.sim_config(protocol, variant, pause);
  Simulator sim(sim_config, seed, std::move(sink));
  sim.start();

  const ErsParams params = sim_config.effective_params();
  const TtlSchedule schedule = discovery_schedule(protocol, variant, params);
  double bm = 0.0;
  for (const Flow& flow : sim.flows()) {
    const auto profile = connectivity_profile(sim.graph(), flow.src, config.p_s,
                                              static_cast<std::size_t>(schedule.max_ttl()));
    bm += total_search_cost(schedule, profile);
  }
  if (!sim.flows().empty()) row.analytic_bm = bm / static_cast<double>(sim.flows().size());

  const RunResult r = sim.finish();
  row.throughput = r.throughput;
  row.e2ed = r.e2ed;
  row.nrl = r.nrl;
  row.discovery_successes = r.metrics.discovery_successes;
  row.discovery_failures = r.metrics.discovery_failures;
  const auto attempts = r.metrics.discovery_successes + r.metrics.discovery_failures;
  if (attempts > 0)
    row.simulated_rreq = static_cast<double>(r.metrics.transmissions_of(PacketKind::kRreq)) /
                         static_cast<double>(attempts);
  return row;
}

std::vector<ResultRow> run_sweep(const ScenarioConfig& config, unsigned parallel,
                                 const CellRunner& runner_in) {
  const CellRunner runner =
      runner_in ? runner_in : CellRunner([](const ScenarioConfig& c, Protocol p, Variant v,
                                            double pause, std::uint64_t seed) {
        return run_cell(c, p, v, pause, seed);
      });
  config.validate();
  struct Cell {
    Protocol protocol;
    Variant variant;
    double pause;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (auto p : config.protocols)
    for (auto v : config.variants)
      for (double pause : config.pause_times)
        for (auto seed : config.seeds) cells.push_back({p, v, pause, seed});

  std::vector<ResultRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& c = cells[i];
      try {
        rows[i] = runner(config, c.protocol, c.variant, c.pause, c.seed);
      } catch (const std::exception& e) {
        rows[i] = ResultRow{};
        rows[i].protocol = c.protocol;
        rows[i].variant = c.variant;
        rows[i].pause_time = c.pause;
        rows[i].seed = c.seed;
        rows[i].error = e.what();
        if (rows[i].error.empty()) rows[i].error = "unknown error";
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(parallel, static_cast<unsigned>(cells.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::stable_sort(rows.begin(), rows.end(), cell_less);
  return rows;
}

double CompareRow::census_error() const {
  return (static_cast<double>(simulated_rreq) - census_cost) / census_cost;
}

double CompareRow::model_error() const {
  return (static_cast<double>(simulated_rreq) - model_cost) / model_cost;
}

std::vector<CompareRow> analytic_compare(const ScenarioConfig& config) {
  config.validate();
  const Arena arena{config.arena_width, config.arena_height, config.radio_range};
  constexpr NodeId kSource = 0;
  const auto absent = static_cast<NodeId>(config.nodes);
  const SimTime kickoff = 1s;

  std::vector<CompareRow> out;
  for (std::size_t t = 0; t < config.compare_topologies; ++t) {
    const std::uint64_t seed = config.compare_seed + t;
    const Graph graph = generate_connected_topology(seed, config.nodes, arena);
    const RingPopulation rings = bfs_rings(graph, kSource);

    for (auto protocol : config.protocols) {
      for (auto variant : config.variants) {
        SimConfig sc = config.sim_config(protocol, variant, 0.0);
        sc.v_max = 0.0;
        sc.traffic.pairs = 0;
        sc.positions.assign(graph.positions().begin(), graph.positions().end());
        const ErsParams params = sc.effective_params();
        const TtlSchedule schedule = discovery_schedule(protocol, variant, params);
        sc.warmup = 0.0;
        sc.duration = to_seconds(kickoff + schedule_wait(schedule, params)) + 1.0;

        // RREQ sends per request id of the source, and the source's own send time.
        std::map<std::uint32_t, std::uint64_t> sends;
        std::map<std::uint32_t, SimTime> first_send;
        Simulator sim(sc, seed, [&](const TraceRecord& r) {
          if (r.event != TraceEvent::kSend || r.kind != PacketKind::kRreq) return;
          if (r.originator != kSource) return;
          ++sends[r.request_id];
          first_send.try_emplace(r.request_id, r.time);
        });
        sim.start(false);
        sim.run_until(kickoff);
        sim.agent(kSource).initiate_discovery(absent);
        sim.finish();

        std::optional<SimTime> failed_at;
        for (const auto& d : sim.discoveries())
          if (d.at == kSource && d.destination == absent) failed_at = d.finished;

        const auto profile = connectivity_profile(graph, kSource, sc.agent.p_s,
                                                  static_cast<std::size_t>(schedule.max_ttl()));
        auto it = first_send.begin();
        for (std::size_t i = 0; i < schedule.size(); ++i) {
          CompareRow row;
          row.protocol = protocol;
          row.variant = variant;
          row.topology = t;
          row.ring = i;
          row.ttl = schedule.rings[i];
          RingPopulation inside;
          inside.counts.assign(rings.counts.begin(),
                               rings.counts.begin() +
                                   static_cast<std::ptrdiff_t>(std::min<std::size_t>(
                                       rings.counts.size(), static_cast<std::size_t>(row.ttl - 1))));
          inside.counts.resize(static_cast<std::size_t>(row.ttl - 1), 0);
          row.census_cost = ring_cost_simple(inside, row.ttl);
          row.model_cost = ring_cost_ttl(profile, row.ttl);
          row.analytic_wait = ring_wait(schedule, i, params);
          if (it != first_send.end()) {
            row.simulated_rreq = sends[it->first];
            auto next = std::next(it);
            if (next != first_send.end())
              row.simulated_wait = next->second - it->second;
            else if (failed_at)
              row.simulated_wait = *failed_at - it->second;
            it = next;
          }
          out.push_back(row);
        }
      }
    }
  }
  return out;
}

}  // namespace ersim
