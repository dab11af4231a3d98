#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ersim/config.hpp"

namespace ersim {

struct ResultRow {
  Protocol protocol = Protocol::kAodv;
  Variant variant = Variant::kErs1;
  double pause_time = 0.0;
  std::uint64_t seed = 0;
  double throughput = 0.0;  // bit/s
  std::optional<double> e2ed;
  std::optional<double> nrl;
  std::uint64_t discovery_successes = 0;
  std::uint64_t discovery_failures = 0;
  // Expected schedule cost from the initial topology's measured profile,
  // averaged over flow sources, and RREQ transmissions per discovery.
  std::optional<double> analytic_bm;
  std::optional<double> simulated_rreq;
  // Non-empty when the cell failed; metric fields are then meaningless.
  std::string error;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

// Sort key: protocol, variant, pause time, seed.
bool cell_less(const ResultRow& a, const ResultRow& b);

using CellRunner =
    std::function<ResultRow(const ScenarioConfig&, Protocol, Variant, double pause, std::uint64_t seed)>;

ResultRow run_cell(const ScenarioConfig& config, Protocol protocol, Variant variant, double pause,
                   std::uint64_t seed, TraceSink sink = {});

// Every (protocol, variant, pause, seed) cell on up to `parallel` threads.
// An exception inside a cell becomes an error row. Rows come back sorted.
// An empty runner means run_cell.
std::vector<ResultRow> run_sweep(const ScenarioConfig& config, unsigned parallel = 1,
                                 const CellRunner& runner = {});

struct CompareRow {
  Protocol protocol = Protocol::kAodv;
  Variant variant = Variant::kErs1;
  std::size_t topology = 0;
  std::size_t ring = 0;  // 0-based position in the discovery schedule
  int ttl = 0;
  double census_cost = 0.0;  // 1 + sum of BFS ring sizes inside the TTL
  double model_cost = 0.0;   // ring_cost_ttl on the measured profile
  std::uint64_t simulated_rreq = 0;
  Duration analytic_wait{0};
  std::optional<Duration> simulated_wait;

  double census_error() const;  // (simulated - census) / census
  double model_error() const;   // (simulated - model) / model
};

// Static, traffic-free runs on `compare_topologies` frozen connected graphs.
// Node 0 searches for an absent destination, so every ring of the
// discovery schedule is walked.
std::vector<CompareRow> analytic_compare(const ScenarioConfig& config);

}  // namespace ersim
