#pragma once

// Independent reference computations for the tests. None of these call into
// the library code they are used to check.

#include <chrono>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ersim/simulator.hpp"
#include "ersim/topology.hpp"
#include "ersim/trace.hpp"

namespace oracle {

inline constexpr int kUnreachable = -1;

// All-pairs hop counts by Floyd-Warshall over the raw unit-disk relation.
std::vector<std::vector<int>> all_pairs_hops(std::span<const ersim::Vec2> positions, double range);

// counts[i-1]: nodes exactly i hops from source.
std::vector<std::size_t> ring_census(std::span<const ersim::Vec2> positions, double range,
                                     ersim::NodeId source);

// RREQ transmissions for one ring of TTL `ttl` under blind rebroadcast:
// the source plus every node closer than ttl hops.
std::uint64_t expected_ring_transmissions(std::span<const ersim::Vec2> positions, double range,
                                          ersim::NodeId source, int ttl);

// Flooding cost written with std::pow, one term per hop limit.
double flood_cost_pow(double p_s, double d_avg, std::span<const double> d_f, int k);

// Sum over rings of tau * 2^(k-1), accumulated in a loop.
std::chrono::microseconds dsr_wait_loop(int m, std::chrono::microseconds tau);

// Locating time as a mixture: found in ring i after (i - 1) full timeouts
// plus half of one, otherwise after all L timeouts plus half of one.
double locating_time_mixture(double timeout, std::span<const double> p);

// Counts gathered from trace records.
struct TraceCounts {
  std::map<ersim::PacketKind, std::uint64_t> sends;
  std::map<ersim::PacketKind, std::uint64_t> sends_in_window;
  // (node, originator, request id) -> RREQ transmissions by that node.
  std::map<std::tuple<ersim::NodeId, ersim::NodeId, std::uint32_t>, int> rreq_rebroadcasts;
};

class TraceRecorder {
 public:
  explicit TraceRecorder(ersim::SimTime window_start = ersim::SimTime{0}) : start_(window_start) {}
  void operator()(const ersim::TraceRecord& r);
  ersim::TraceSink sink() {
    return [this](const ersim::TraceRecord& r) { (*this)(r); };
  }

  const TraceCounts& counts() const { return counts_; }
  const std::vector<ersim::TraceRecord>& records() const { return records_; }
  std::vector<std::string>& lines() { return lines_; }

 private:
  ersim::SimTime start_;
  TraceCounts counts_;
  std::vector<ersim::TraceRecord> records_;
  std::vector<std::string> lines_;
};

}  // namespace oracle
