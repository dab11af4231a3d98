#include "ersim/analytics.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ersim/error.hpp"

namespace ersim {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

void require(bool ok, ErrorCode code, const std::string& message) {
  if (!ok) throw Error(code, message);
}

void require_profile(const ConnectivityProfile& profile, std::size_t entries,
                     const char* op) {
  require(profile.d_f.size() >= entries, ErrorCode::kInsufficientProfile,
          std::string(op) + ": needs " + std::to_string(entries) +
              " forwarding degrees, profile has " + std::to_string(profile.d_f.size()));
}

}  // namespace

std::string_view to_string(Protocol p) {
  switch (p) {
    case Protocol::kAodv: return "AODV";
    case Protocol::kDsr: return "DSR";
    case Protocol::kDymo: return "DYMO";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  return v == Variant::kErs1 ? "ERS1" : "ERS2";
}

std::optional<Protocol> parse_protocol(std::string_view text) {
  const auto t = lower(text);
  if (t == "aodv") return Protocol::kAodv;
  if (t == "dsr") return Protocol::kDsr;
  if (t == "dymo") return Protocol::kDymo;
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view text) {
  const auto t = lower(text);
  if (t == "ers1") return Variant::kErs1;
  if (t == "ers2") return Variant::kErs2;
  return std::nullopt;
}

ErsParams ErsParams::preset(Protocol protocol, Variant variant) {
  const bool enhanced = variant == Variant::kErs2;
  ErsParams p;
  p.hello_interval = 1000ms;
  p.timeout_buffer = 2;
  p.rreq_retries = 2;
  p.rreq_tries = 3;
  p.local_add_ttl = enhanced ? 1 : 2;
  p.node_traversal_time = enhanced ? 25ms : 40ms;
  p.nonprop_timeout = enhanced ? 90ms : 30ms;
  p.discovery_hop_limit = 255;
  p.max_main_rexmt = 2;
  p.tap_cache_size = enhanced ? 256 : 1024;

  switch (protocol) {
    case Protocol::kAodv:
      p.ttl_start = enhanced ? 3 : 2;
      p.ttl_increment = enhanced ? 3 : 2;
      p.ttl_threshold = enhanced ? 9 : 7;
      p.net_diameter = {35};
      p.net_traversal_time = enhanced ? 1100ms : 5600ms;
      break;
    case Protocol::kDymo:
      p.ttl_start = enhanced ? 3 : 2;
      p.ttl_increment = enhanced ? 3 : 2;
      p.ttl_threshold = enhanced ? 9 : 7;
      p.net_diameter = enhanced ? std::vector<int>{20, 35, 75} : std::vector<int>{10, 20};
      p.net_traversal_time = enhanced ? 1100ms : 1920ms;
      break;
    case Protocol::kDsr:
      // Only the first ring differs; the rest is a single network-wide ring.
      p.ttl_start = enhanced ? 3 : 1;
      p.ttl_increment = 1;
      p.ttl_threshold = p.ttl_start;
      p.net_diameter = {p.discovery_hop_limit};
      // ns-2 DSR's maximum request period.
      p.net_traversal_time = 10s;
      break;
  }
  return p;
}

void ErsParams::validate() const {
  auto field = [](bool ok, const char* name) {
    require(ok, ErrorCode::kInvalidArgument, std::string("ErsParams.") + name + " out of range");
  };
  field(hello_interval > Duration::zero(), "hello_interval");
  field(node_traversal_time > Duration::zero(), "node_traversal_time");
  field(net_traversal_time > Duration::zero(), "net_traversal_time");
  field(nonprop_timeout > Duration::zero(), "nonprop_timeout");
  field(ttl_start >= 1, "ttl_start");
  field(ttl_increment >= 1, "ttl_increment");
  field(ttl_start <= ttl_threshold, "ttl_threshold");
  field(!net_diameter.empty(), "net_diameter");
  field(std::all_of(net_diameter.begin(), net_diameter.end(),
                    [&](int d) { return d >= ttl_threshold; }),
        "net_diameter");
  field(std::is_sorted(net_diameter.begin(), net_diameter.end()), "net_diameter");
  field(rreq_retries >= 0, "rreq_retries");
  field(rreq_tries >= 1, "rreq_tries");
  field(local_add_ttl >= 0, "local_add_ttl");
  field(timeout_buffer >= 0, "timeout_buffer");
  field(discovery_hop_limit >= ttl_threshold, "discovery_hop_limit");
  field(max_main_rexmt >= 0, "max_main_rexmt");
  field(tap_cache_size >= 1, "tap_cache_size");
}

int TtlSchedule::max_ttl() const {
  return rings.empty() ? 0 : *std::max_element(rings.begin(), rings.end());
}

void ConnectivityProfile::validate() const {
  require(p_s >= 0.0 && p_s <= 1.0, ErrorCode::kInvalidArgument, "p_s must lie in [0, 1]");
  require(d_avg >= 0.0, ErrorCode::kInvalidArgument, "d_avg must be non-negative");
  require(std::all_of(d_f.begin(), d_f.end(), [](double d) { return d >= 0.0; }),
          ErrorCode::kInvalidArgument, "d_f entries must be non-negative");
}

std::size_t RingPopulation::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

void LocationDistribution::validate() const {
  double sum = 0.0;
  for (double x : p) {
    require(x >= 0.0 && x <= 1.0, ErrorCode::kInvalidArgument,
            "location probabilities must lie in [0, 1]");
    sum += x;
  }
  require(sum <= 1.0 + 1e-9, ErrorCode::kInvalidArgument,
          "location probabilities sum above 1");
}

TtlSchedule build_schedule(Protocol protocol, Variant variant, const ErsParams& params) {
  params.validate();
  TtlSchedule s{.rings = {}, .protocol = protocol, .variant = variant};
  switch (protocol) {
    case Protocol::kAodv:
      for (int ttl = params.ttl_start; ttl <= params.ttl_threshold; ttl += params.ttl_increment)
        s.rings.push_back(ttl);
      s.rings.insert(s.rings.end(), 1 + params.rreq_retries, params.net_diameter.back());
      break;
    case Protocol::kDymo:
      for (int ttl = params.ttl_start; ttl <= params.ttl_threshold; ttl += params.ttl_increment)
        s.rings.push_back(ttl);
      s.rings.insert(s.rings.end(), params.net_diameter.begin(), params.net_diameter.end());
      break;
    case Protocol::kDsr:
      s.rings = {params.ttl_start, params.discovery_hop_limit};
      break;
  }
  return s;
}

TtlSchedule discovery_schedule(Protocol protocol, Variant variant, const ErsParams& params) {
  TtlSchedule s = build_schedule(protocol, variant, params);
  if (protocol == Protocol::kDsr) {
    s.rings.insert(s.rings.end(), params.max_main_rexmt, params.discovery_hop_limit);
  } else if (protocol == Protocol::kDymo) {
    auto wide = std::count_if(s.rings.begin(), s.rings.end(),
                              [&](int ttl) { return ttl > params.ttl_threshold; });
    for (; wide < params.rreq_tries; ++wide) s.rings.push_back(s.rings.back());
  }
  return s;
}

double avg_degree(std::span<const double> d_f, DegreeMode /*mode*/, std::size_t horizon) {
  require(horizon >= 1, ErrorCode::kInvalidArgument, "avg_degree: horizon must be >= 1");
  require(d_f.size() >= horizon, ErrorCode::kInsufficientProfile,
          "avg_degree: horizon exceeds forwarding-degree list");
  double sum = 0.0;
  for (std::size_t i = 0; i < horizon; ++i) sum += d_f[i] / static_cast<double>(horizon);
  return sum;
}

double blind_flood_cost(const ConnectivityProfile& profile, int k_n) {
  require(k_n >= 1, ErrorCode::kInvalidArgument, "blind_flood_cost: k_n must be >= 1");
  require_profile(profile, static_cast<std::size_t>(k_n - 1), "blind_flood_cost");
  const double ps = profile.p_s;
  const double first = ps * profile.d_avg;
  if (k_n == 1) return first;

  double sum = 0.0;
  double ps_power = ps;  // P_S^{i+1} after the update below
  double product = 1.0;
  for (int i = 1; i <= k_n - 1; ++i) {
    ps_power *= ps;
    product *= profile.d_f[static_cast<std::size_t>(i - 1)];
    sum += ps_power * product;
  }
  return first + profile.d_avg * sum;
}

double ring_cost_simple(const RingPopulation& rings, int k) {
  require(k >= 1, ErrorCode::kInvalidArgument, "ring_cost_simple: k must be >= 1");
  require(rings.counts.size() >= static_cast<std::size_t>(k - 1), ErrorCode::kInsufficientProfile,
          "ring_cost_simple: fewer ring counts than k - 1");
  double cost = 1.0;
  for (int i = 1; i <= k - 1; ++i) cost += static_cast<double>(rings.counts[i - 1]);
  return cost;
}

double ring_cost_ttl(const ConnectivityProfile& profile, int ttl) {
  require(ttl >= 1, ErrorCode::kInvalidArgument, "ring_cost_ttl: ttl must be >= 1");
  require_profile(profile, static_cast<std::size_t>(ttl - 1), "ring_cost_ttl");
  const double ps = profile.p_s;
  const double base = ps * profile.d_avg;
  if (ttl == 1) return base;

  // Sum over hop limits 1..ttl-1; same accumulation order as the flood form.
  double sum = 0.0;
  double ps_power = ps;
  double product = 1.0;
  for (int hop = 1; hop < ttl; ++hop) {
    ps_power *= ps;
    product *= profile.d_f[static_cast<std::size_t>(hop - 1)];
    sum += ps_power * product;
  }
  return base + profile.d_avg * sum;
}

double total_search_cost(const TtlSchedule& schedule, const ConnectivityProfile& profile) {
  require(!schedule.empty(), ErrorCode::kInvalidSchedule, "total_search_cost: empty schedule");
  double total = 0.0;
  for (int ttl : schedule.rings) total += ring_cost_ttl(profile, ttl);
  return total;
}

FracDuration expected_locating_time(FracDuration timeout, const LocationDistribution& dist) {
  require(timeout.count() > 0.0, ErrorCode::kInvalidArgument,
          "expected_locating_time: timeout must be positive");
  dist.validate();
  const double t = timeout.count();
  const auto l = static_cast<double>(dist.threshold());
  double weighted = 0.0;
  double mass = 0.0;
  for (std::size_t i = 1; i <= dist.p.size(); ++i) {
    weighted += static_cast<double>(i - 1) * dist.p[i - 1];
    mass += dist.p[i - 1];
  }
  return FracDuration{t * weighted - l * t * mass + l * t + 0.5 * t};
}

Duration dsr_expected_wait(int m, Duration tau) {
  require(m >= 1, ErrorCode::kInvalidArgument, "dsr_expected_wait: m must be >= 1");
  require(tau > Duration::zero(), ErrorCode::kInvalidArgument,
          "dsr_expected_wait: tau must be positive");
  if (m == 1) return tau;
  Duration total{0};
  for (int k = 1; k <= m; ++k) total += tau * (std::int64_t{1} << (k - 1));
  return total;
}

Duration ring_traversal_wait(int ttl, const ErsParams& params) {
  require(ttl >= 1, ErrorCode::kInvalidArgument, "ring_traversal_wait: ttl must be >= 1");
  return 2 * params.node_traversal_time * (ttl + params.timeout_buffer);
}

Duration ring_wait(const TtlSchedule& schedule, std::size_t ring_index, const ErsParams& params) {
  require(ring_index < schedule.size(), ErrorCode::kInvalidSchedule,
          "ring_wait: ring index past end of schedule");
  Duration wait;
  if (schedule.protocol == Protocol::kDsr) {
    wait = params.nonprop_timeout * (std::int64_t{1} << ring_index);
  } else {
    wait = ring_traversal_wait(schedule.rings[ring_index], params);
  }
  return std::min(wait, params.net_traversal_time);
}

Duration schedule_wait(const TtlSchedule& schedule, const ErsParams& params) {
  Duration total{0};
  for (std::size_t i = 0; i < schedule.size(); ++i) total += ring_wait(schedule, i, params);
  return total;
}

ThresholdChoice optimal_threshold(const ConnectivityProfile& profile,
                                  const LocationDistribution& dist, FracDuration timeout,
                                  int max_l) {
  require(max_l >= 1, ErrorCode::kInvalidArgument, "optimal_threshold: max_l must be >= 1");
  dist.validate();
  const int full_network = static_cast<int>(profile.d_f.size()) + 1;
  require(max_l <= full_network, ErrorCode::kInsufficientProfile,
          "optimal_threshold: max_l exceeds the profile's hop horizon");
  const double flood = blind_flood_cost(profile, full_network);
  auto found_at = [&](int ring) {
    return static_cast<std::size_t>(ring) <= dist.p.size() ? dist.p[ring - 1] : 0.0;
  };

  ThresholdChoice best;
  best.expected_cost = -1.0;
  for (int l = 1; l <= max_l; ++l) {
    double cumulative = 0.0;  // cost of rings 1..i
    double found_mass = 0.0;
    double expected = 0.0;
    for (int i = 1; i <= l; ++i) {
      cumulative += ring_cost_ttl(profile, i);
      expected += found_at(i) * cumulative;
      found_mass += found_at(i);
    }
    expected += std::max(0.0, 1.0 - found_mass) * (cumulative + flood);
    best.cost_by_threshold.push_back(expected);
    if (best.expected_cost < 0.0 || expected < best.expected_cost) {
      best.threshold = l;
      best.expected_cost = expected;
    }
  }
  LocationDistribution truncated;
  for (int i = 1; i <= best.threshold; ++i) truncated.p.push_back(found_at(i));
  best.expected_time = expected_locating_time(timeout, truncated);
  return best;
}

}  // namespace ersim
