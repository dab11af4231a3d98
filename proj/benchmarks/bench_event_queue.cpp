#include <benchmark/benchmark.h>

#include "ersim/event_queue.hpp"

using namespace ersim;

// Self-rescheduling chains, roughly the shape of hello timers.
static void BM_EventChains(benchmark::State& state) {
  const auto chains = static_cast<int>(state.range(0));
  for (auto _ : state) {
    EventQueue q;
    std::uint64_t fired = 0;
    std::function<void(int)> tick = [&](int c) {
      ++fired;
      q.schedule_in(Duration(1000 + c), EventKind::kTimer, [&, c] { tick(c); });
    };
    for (int c = 0; c < chains; ++c) q.schedule(SimTime(c), EventKind::kTimer, [&, c] { tick(c); });
    q.run_until(SimTime(1s));
    benchmark::DoNotOptimize(fired);
    state.counters["events"] = static_cast<double>(fired);
  }
}
BENCHMARK(BM_EventChains)->Arg(10)->Arg(100);
