#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ersim/analytics.hpp"
#include "ersim/error.hpp"
#include "ersim/experiment.hpp"
#include "ersim/report.hpp"

using namespace ersim;

namespace {

ResultRow fake_cell(const ScenarioConfig&, Protocol p, Variant v, double pause, std::uint64_t seed) {
  ResultRow r;
  r.protocol = p;
  r.variant = v;
  r.pause_time = pause;
  r.seed = seed;
  r.throughput = static_cast<double>(seed) * 10.0 + pause;
  return r;
}

}  // namespace

TEST(Experiment, SweepCoversEveryCell) {
  const auto rows = run_sweep(ScenarioConfig{}, 1, fake_cell);
  EXPECT_EQ(rows.size(), 90u);
  std::set<std::tuple<Protocol, Variant, double, std::uint64_t>> cells;
  for (const auto& r : rows) cells.insert({r.protocol, r.variant, r.pause_time, r.seed});
  EXPECT_EQ(cells.size(), 90u);
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), cell_less));
}

TEST(Experiment, OrderIndependentOfParallelism) {
  const auto serial = run_sweep(ScenarioConfig{}, 1, fake_cell);
  const auto parallel = run_sweep(ScenarioConfig{}, 4, fake_cell);
  EXPECT_EQ(serial, parallel);
}

TEST(Experiment, CrashBecomesErrorRow) {
  const CellRunner runner = [](const ScenarioConfig& c, Protocol p, Variant v, double pause,
                               std::uint64_t seed) {
    if (p == Protocol::kDsr && v == Variant::kErs2 && pause == 100.0 && seed == 3)
      throw std::runtime_error("injected");
    return fake_cell(c, p, v, pause, seed);
  };
  const auto rows = run_sweep(ScenarioConfig{}, 2, runner);
  ASSERT_EQ(rows.size(), 90u);
  const auto bad = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.error.empty(); });
  EXPECT_EQ(bad, 1);
  const auto it = std::find_if(rows.begin(), rows.end(), [](const auto& r) { return !r.error.empty(); });
  EXPECT_EQ(it->protocol, Protocol::kDsr);
  EXPECT_EQ(it->seed, 3u);
  EXPECT_NE(it->error.find("injected"), std::string::npos);
  EXPECT_EQ(summarize(rows).size(), 18u);
}

TEST(Experiment, RealCellIsDeterministic) {
  ScenarioConfig c;
  c.duration = 40;
  c.warmup = 5;
  c.nodes = 20;
  const auto a = run_cell(c, Protocol::kAodv, Variant::kErs1, 0.0, 3);
  const auto b = run_cell(c, Protocol::kAodv, Variant::kErs1, 0.0, 3);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(a.error.empty());
  EXPECT_GT(a.throughput, 0.0);
  ASSERT_TRUE(a.analytic_bm);
  EXPECT_GT(*a.analytic_bm, 0.0);
}

TEST(Experiment, AnalyticCompareMatchesCensus) {
  ScenarioConfig c;
  c.compare_topologies = 3;
  const auto rows = analytic_compare(c);
  ASSERT_FALSE(rows.empty());
  for (const auto& r : rows) {
    EXPECT_EQ(r.census_error(), 0.0) << to_string(r.protocol) << " ring " << r.ring;
    ASSERT_TRUE(r.simulated_wait);
    EXPECT_EQ(*r.simulated_wait, r.analytic_wait);
  }
}

TEST(Experiment, CompareWaitsFollowSchedule) {
  ScenarioConfig c;
  c.compare_topologies = 1;
  c.protocols = {Protocol::kAodv};
  c.variants = {Variant::kErs1};
  const auto rows = analytic_compare(c);
  const auto params = ErsParams::preset(Protocol::kAodv, Variant::kErs1);
  const auto schedule = discovery_schedule(Protocol::kAodv, Variant::kErs1, params);
  ASSERT_EQ(rows.size(), schedule.size());
  EXPECT_EQ(rows[0].analytic_wait, 320ms);
  EXPECT_EQ(rows[0].ttl, 2);
  Duration total{0};
  for (const auto& r : rows) total += *r.simulated_wait;
  EXPECT_EQ(total, schedule_wait(schedule, params));
}
