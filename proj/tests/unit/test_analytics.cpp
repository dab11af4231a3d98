#include <gtest/gtest.h>

#include <random>

#include "ersim/analytics.hpp"
#include "ersim/error.hpp"
#include "oracles.hpp"

using namespace ersim;

namespace {

std::vector<int> schedule_of(Protocol p, Variant v) {
  return build_schedule(p, v, ErsParams::preset(p, v)).rings;
}

ConnectivityProfile random_profile(std::mt19937_64& gen, std::size_t hops) {
  std::uniform_real_distribution<double> ps(0.0, 1.0), deg(0.0, 12.0);
  ConnectivityProfile p;
  p.p_s = ps(gen);
  p.d_avg = deg(gen);
  for (std::size_t i = 0; i < hops; ++i) p.d_f.push_back(deg(gen) / 3.0);
  return p;
}

}  // namespace

TEST(Schedule, SixCells) {
  EXPECT_EQ(schedule_of(Protocol::kAodv, Variant::kErs1), (std::vector<int>{2, 4, 6, 35, 35, 35}));
  EXPECT_EQ(schedule_of(Protocol::kAodv, Variant::kErs2), (std::vector<int>{3, 6, 9, 35, 35, 35}));
  EXPECT_EQ(schedule_of(Protocol::kDsr, Variant::kErs1), (std::vector<int>{1, 255}));
  EXPECT_EQ(schedule_of(Protocol::kDsr, Variant::kErs2), (std::vector<int>{3, 255}));
  EXPECT_EQ(schedule_of(Protocol::kDymo, Variant::kErs1), (std::vector<int>{2, 4, 6, 10, 20}));
  EXPECT_EQ(schedule_of(Protocol::kDymo, Variant::kErs2), (std::vector<int>{3, 6, 9, 20, 35, 75}));
}

TEST(Schedule, DiscoveryAddsRetries) {
  auto walk = [](Protocol p, Variant v) {
    return discovery_schedule(p, v, ErsParams::preset(p, v)).rings;
  };
  EXPECT_EQ(walk(Protocol::kDsr, Variant::kErs1), (std::vector<int>{1, 255, 255, 255}));
  EXPECT_EQ(walk(Protocol::kDymo, Variant::kErs1), (std::vector<int>{2, 4, 6, 10, 20, 20}));
  EXPECT_EQ(walk(Protocol::kDymo, Variant::kErs2), (std::vector<int>{3, 6, 9, 20, 35, 75}));
  EXPECT_EQ(walk(Protocol::kAodv, Variant::kErs2), (std::vector<int>{3, 6, 9, 35, 35, 35}));
}

TEST(Schedule, RejectsBadParams) {
  auto p = ErsParams::preset(Protocol::kAodv, Variant::kErs1);
  p.ttl_increment = 0;
  EXPECT_THROW(build_schedule(Protocol::kAodv, Variant::kErs1, p), Error);
  p = ErsParams::preset(Protocol::kAodv, Variant::kErs1);
  p.net_diameter.clear();
  EXPECT_THROW(p.validate(), Error);
}

TEST(Cost, RingFormMatchesFloodForm) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const auto profile = random_profile(gen, 12);
    for (int ttl = 1; ttl <= 10; ++ttl) {
      EXPECT_EQ(ring_cost_ttl(profile, ttl), blind_flood_cost(profile, ttl));
      const double ref = oracle::flood_cost_pow(profile.p_s, profile.d_avg, profile.d_f, ttl);
      EXPECT_NEAR(ring_cost_ttl(profile, ttl), ref, 1e-9 * std::max(1.0, ref));
    }
  }
}

TEST(Cost, SingleHopIsPsTimesDegree) {
  ConnectivityProfile p{0.5, 6.0, {}};
  EXPECT_DOUBLE_EQ(blind_flood_cost(p, 1), 3.0);
}

TEST(Cost, ShortProfileThrows) {
  ConnectivityProfile p{1.0, 3.0, {2.0}};
  try {
    ring_cost_ttl(p, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientProfile);
  }
  EXPECT_THROW(ring_cost_ttl(p, 0), Error);
}

TEST(Cost, CensusForm) {
  RingPopulation rings{{4, 7, 9}};
  EXPECT_EQ(ring_cost_simple(rings, 1), 1.0);
  EXPECT_EQ(ring_cost_simple(rings, 3), 12.0);
  EXPECT_EQ(ring_cost_simple(rings, 4), 21.0);
  EXPECT_THROW(ring_cost_simple(rings, 5), Error);
}

TEST(Cost, TotalIsSumOverRings) {
  ConnectivityProfile p{1.0, 4.0, std::vector<double>(40, 1.5)};
  const auto s = build_schedule(Protocol::kAodv, Variant::kErs1,
                                ErsParams::preset(Protocol::kAodv, Variant::kErs1));
  double sum = 0.0;
  for (int ttl : s.rings) sum += ring_cost_ttl(p, ttl);
  EXPECT_EQ(total_search_cost(s, p), sum);
  EXPECT_THROW(total_search_cost(TtlSchedule{}, p), Error);
}

TEST(Degree, MeanOverHorizon) {
  const std::vector<double> d_f{2.0, 4.0, 6.0, 8.0};
  EXPECT_DOUBLE_EQ(avg_degree(d_f, DegreeMode::kErs, 2), 3.0);
  EXPECT_DOUBLE_EQ(avg_degree(d_f, DegreeMode::kFlooding, 4), 5.0);
  EXPECT_THROW(avg_degree(d_f, DegreeMode::kErs, 5), Error);
}

TEST(LocatingTime, ClosedCases) {
  EXPECT_EQ(expected_locating_time(FracDuration(100000.0), {{1.0}}).count(), 50000.0);
  EXPECT_EQ(expected_locating_time(FracDuration(100000.0), {{0.0, 0.0, 0.0}}).count(), 350000.0);
  EXPECT_THROW(expected_locating_time(FracDuration(0.0), {{1.0}}), Error);
  EXPECT_THROW(expected_locating_time(FracDuration(1.0), {{0.7, 0.7}}), Error);
}

TEST(LocatingTime, AgreesWithMixtureForm) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(1 + trial % 8);
    double left = 1.0;
    for (double& x : p) {
      x = left * u(gen);
      left -= x;
    }
    const double t = 1000.0 + 1e5 * u(gen);
    EXPECT_NEAR(expected_locating_time(FracDuration(t), {p}).count(),
                oracle::locating_time_mixture(t, p), 1e-6 * t);
  }
}

TEST(Waits, DsrDoubling) {
  EXPECT_EQ(dsr_expected_wait(1, 30ms), 30ms);
  EXPECT_EQ(dsr_expected_wait(2, 30ms), 90ms);
  for (int m = 1; m <= 20; ++m)
    EXPECT_EQ(dsr_expected_wait(m, 90ms), oracle::dsr_wait_loop(m, 90ms));
  EXPECT_THROW(dsr_expected_wait(0, 30ms), Error);
}

TEST(Waits, RingTraversal) {
  const auto ers1 = ErsParams::preset(Protocol::kAodv, Variant::kErs1);
  const auto ers2 = ErsParams::preset(Protocol::kAodv, Variant::kErs2);
  EXPECT_EQ(ring_traversal_wait(2, ers1), 2 * 40ms * (2 + 2));
  EXPECT_EQ(ring_traversal_wait(2, ers1), 320ms);
  EXPECT_EQ(ring_traversal_wait(3, ers2), 250ms);
}

TEST(Waits, PerRingCap) {
  const auto aodv2 = ErsParams::preset(Protocol::kAodv, Variant::kErs2);
  const auto s = build_schedule(Protocol::kAodv, Variant::kErs2, aodv2);
  EXPECT_EQ(ring_wait(s, 3, aodv2), 1100ms);  // 2 * 25 * 37 = 1850 ms, capped
  const auto aodv1 = ErsParams::preset(Protocol::kAodv, Variant::kErs1);
  const auto s1 = build_schedule(Protocol::kAodv, Variant::kErs1, aodv1);
  EXPECT_EQ(ring_wait(s1, 3, aodv1), 2960ms);
  EXPECT_THROW(ring_wait(s1, 6, aodv1), Error);
}

TEST(Waits, DsrRingsDouble) {
  const auto p = ErsParams::preset(Protocol::kDsr, Variant::kErs1);
  const auto s = discovery_schedule(Protocol::kDsr, Variant::kErs1, p);
  EXPECT_EQ(ring_wait(s, 0, p), 30ms);
  EXPECT_EQ(ring_wait(s, 1, p), 60ms);
  EXPECT_EQ(ring_wait(s, 3, p), 240ms);
  EXPECT_EQ(schedule_wait(s, p), 450ms);
}

TEST(Threshold, PrefersFirstRingWhenTargetIsAdjacent) {
  ConnectivityProfile p{1.0, 4.0, std::vector<double>(6, 2.0)};
  const auto c = optimal_threshold(p, {{1.0}}, FracDuration(1000.0), 5);
  EXPECT_EQ(c.threshold, 1);
  EXPECT_EQ(c.cost_by_threshold.size(), 5u);
  EXPECT_DOUBLE_EQ(c.expected_cost, ring_cost_ttl(p, 1));
  EXPECT_DOUBLE_EQ(c.expected_time.count(), 500.0);
}

TEST(Threshold, BruteForceAgreement) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    ConnectivityProfile p = random_profile(gen, 8);
    std::vector<double> probs(8);
    double left = 1.0;
    for (double& x : probs) {
      x = left * u(gen);
      left -= x;
    }
    const auto c = optimal_threshold(p, {probs}, FracDuration(100.0), 8);
    const double flood = oracle::flood_cost_pow(p.p_s, p.d_avg, p.d_f, 9);
    double best = 0.0;
    int best_l = 0;
    for (int l = 1; l <= 8; ++l) {
      double e = 0.0, mass = 0.0;
      for (int i = 1; i <= l; ++i) {
        double prefix = 0.0;
        for (int j = 1; j <= i; ++j) prefix += oracle::flood_cost_pow(p.p_s, p.d_avg, p.d_f, j);
        e += probs[i - 1] * prefix;
        mass += probs[i - 1];
      }
      double all = 0.0;
      for (int j = 1; j <= l; ++j) all += oracle::flood_cost_pow(p.p_s, p.d_avg, p.d_f, j);
      e += (1.0 - mass) * (all + flood);
      EXPECT_NEAR(c.cost_by_threshold[l - 1], e, 1e-9 * std::max(1.0, e));
      if (best_l == 0 || e < best - 1e-9 * std::max(1.0, e)) {
        best = e;
        best_l = l;
      }
    }
    EXPECT_EQ(c.threshold, best_l);
  }
}

TEST(Names, RoundTrip) {
  for (auto p : {Protocol::kAodv, Protocol::kDsr, Protocol::kDymo})
    EXPECT_EQ(parse_protocol(to_string(p)), p);
  for (auto v : {Variant::kErs1, Variant::kErs2}) EXPECT_EQ(parse_variant(to_string(v)), v);
  EXPECT_EQ(parse_protocol("olsr"), std::nullopt);
}
