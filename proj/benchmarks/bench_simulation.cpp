#include <benchmark/benchmark.h>

#include "ersim/simulator.hpp"

using namespace ersim;

static void BM_ShortRun(benchmark::State& state) {
  SimConfig c;
  c.protocol = static_cast<Protocol>(state.range(0));
  c.duration = 60.0;
  c.warmup = 10.0;
  std::uint64_t events = 0;
  for (auto _ : state) events = run(c, 1).events;
  state.counters["events"] = static_cast<double>(events);
  state.SetLabel(std::string(to_string(c.protocol)));
}
BENCHMARK(BM_ShortRun)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
