#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ersim/time.hpp"

namespace ersim {

enum class Protocol { kAodv, kDsr, kDymo };
enum class Variant { kErs1, kErs2 };

std::string_view to_string(Protocol p);
std::string_view to_string(Variant v);
std::optional<Protocol> parse_protocol(std::string_view text);
std::optional<Variant> parse_variant(std::string_view text);

// Protocol constants governing expanding ring search. Field names follow
// the AODV/DYMO/DSR constant names; DSR-only fields are ignored by the
// table-driven protocols and vice versa.
struct ErsParams {
  Duration hello_interval{1000ms};
  int ttl_start = 2;
  int ttl_increment = 2;
  int ttl_threshold = 7;
  // Network-wide TTL values tried after the threshold is passed. AODV has
  // one value; DYMO escalates through several.
  std::vector<int> net_diameter{35};
  Duration node_traversal_time{40ms};
  // Per-ring upper bound on the retry wait.
  Duration net_traversal_time{5600ms};
  int rreq_retries = 2;  // AODV: extra network-wide attempts
  int rreq_tries = 3;    // DYMO: total network-wide attempts
  int local_add_ttl = 2;
  int timeout_buffer = 2;
  Duration nonprop_timeout{30ms};  // DSR tau
  int discovery_hop_limit = 255;
  int max_main_rexmt = 2;
  std::size_t tap_cache_size = 1024;

  // Constants for one (protocol, variant) cell.
  static ErsParams preset(Protocol protocol, Variant variant);

  // Throws Error(kInvalidArgument) naming the offending field.
  void validate() const;
};

struct TtlSchedule {
  std::vector<int> rings;
  Protocol protocol = Protocol::kAodv;
  Variant variant = Variant::kErs1;

  std::size_t size() const { return rings.size(); }
  bool empty() const { return rings.empty(); }
  int max_ttl() const;
};

struct ConnectivityProfile {
  double p_s = 1.0;
  double d_avg = 0.0;
  // d_f[0] is the forwarding degree at hop 1.
  std::vector<double> d_f;

  void validate() const;
};

struct RingPopulation {
  // counts[0] is the number of nodes exactly one hop from the source.
  std::vector<std::size_t> counts;

  std::size_t total() const;
};

struct LocationDistribution {
  // p[i - 1] is the probability the destination is first found by ring i.
  std::vector<double> p;

  std::size_t threshold() const { return p.size(); }
  void validate() const;
};

// Canonical first-pass TTL sequence for a protocol and variant:
//   AODV: TTL_START stepping by TTL_INCREMENT up to TTL_THRESHOLD, then
//         NET_DIAMETER once plus RREQ_RETRIES repeats.
//   DYMO: the same ramp, then each escalation value once.
//   DSR:  the non-propagating ring, then DiscoveryHopLimit.
TtlSchedule build_schedule(Protocol protocol, Variant variant, const ErsParams& params);

// The schedule a node actually walks: build_schedule plus protocol retries
// (DSR repeats the network-wide ring MaxMainRexmt times, DYMO repeats its
// final value until RREQ_TRIES network-wide attempts have been made).
TtlSchedule discovery_schedule(Protocol protocol, Variant variant, const ErsParams& params);

enum class DegreeMode { kFlooding, kErs };

// Mean of the first `horizon` forwarding degrees (k_N for flooding, M for
// ERS).
double avg_degree(std::span<const double> d_f, DegreeMode mode, std::size_t horizon);

// Expected broadcasts for a search reaching k_n hops:
//   P_S d_avg + d_avg * sum_{i=1}^{k_n-1} P_S^{i+1} prod_{j=1}^{i} d_f[j]
double blind_flood_cost(const ConnectivityProfile& profile, int k_n);

// Ring census form: 1 + sum_{i=1}^{k-1} n_i.
double ring_cost_simple(const RingPopulation& rings, int k);

// Cost of one ring expressed through its TTL. Numerically identical to
// blind_flood_cost(profile, ttl).
double ring_cost_ttl(const ConnectivityProfile& profile, int ttl);

// Sum of ring costs over every ring in the schedule.
double total_search_cost(const TtlSchedule& schedule, const ConnectivityProfile& profile);

// Expected locating time with fixed per-ring timeout T and search
// threshold L = dist.threshold().
FracDuration expected_locating_time(FracDuration timeout, const LocationDistribution& dist);

// Cumulative DSR wait over m rings with tau doubling each ring.
Duration dsr_expected_wait(int m, Duration tau);

// 2 * NODE_TRAVERSAL_TIME * (ttl + TIMEOUT_BUFFER).
Duration ring_traversal_wait(int ttl, const ErsParams& params);

// Wait armed after sending ring `ring_index` (0-based) of `schedule`:
// ring_traversal_wait for AODV/DYMO, tau * 2^index for DSR, each bounded
// above by NET_TRAVERSAL_TIME.
Duration ring_wait(const TtlSchedule& schedule, std::size_t ring_index, const ErsParams& params);

// Sum of ring_wait over the whole schedule.
Duration schedule_wait(const TtlSchedule& schedule, const ErsParams& params);

struct ThresholdChoice {
  int threshold = 1;
  double expected_cost = 0.0;
  FracDuration expected_time{0.0};
  // expected_cost for every candidate L = 1..max_l.
  std::vector<double> cost_by_threshold;
};

// Exhaustive search over L in [1, max_l] for the ring count minimising the
// expected broadcast cost of "search rings 1..L, then flood the network".
// Rings are TTL 1..L; the network flood reaches profile.d_f.size() + 1 hops.
ThresholdChoice optimal_threshold(const ConnectivityProfile& profile,
                                  const LocationDistribution& dist, FracDuration timeout,
                                  int max_l);

}  // namespace ersim
