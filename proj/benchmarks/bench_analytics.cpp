#include <benchmark/benchmark.h>

#include "ersim/analytics.hpp"
#include "ersim/topology.hpp"

using namespace ersim;

static ConnectivityProfile profile(int hops) {
  ConnectivityProfile p;
  p.p_s = 0.9;
  p.d_avg = 7.5;
  for (int i = 0; i < hops; ++i) p.d_f.push_back(1.0 + 0.1 * i);
  return p;
}

static void BM_RingCost(benchmark::State& state) {
  const int ttl = static_cast<int>(state.range(0));
  const auto p = profile(ttl);
  for (auto _ : state) benchmark::DoNotOptimize(ring_cost_ttl(p, ttl));
}
BENCHMARK(BM_RingCost)->Arg(2)->Arg(10)->Arg(35);

static void BM_OptimalThreshold(benchmark::State& state) {
  const auto p = profile(12);
  const LocationDistribution dist{{0.2, 0.2, 0.2, 0.1, 0.1, 0.05, 0.05, 0.05}};
  for (auto _ : state) benchmark::DoNotOptimize(optimal_threshold(p, dist, FracDuration(1e5), 8));
}
BENCHMARK(BM_OptimalThreshold);

static void BM_ConnectedTopology(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto g = generate_connected_topology(seed++, static_cast<std::size_t>(state.range(0)), Arena{});
    benchmark::DoNotOptimize(bfs_rings(g, 0));
  }
}
BENCHMARK(BM_ConnectedTopology)->Arg(50)->Arg(200);
