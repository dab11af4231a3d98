#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ersim/analytics.hpp"
#include "ersim/simulator.hpp"

namespace ersim {

// Everything a sweep or comparison needs. Keys in the text format match the
// member names.
struct ScenarioConfig {
  std::size_t nodes = 50;
  double arena_width = 1000.0;
  double arena_height = 1000.0;
  double radio_range = 250.0;
  double v_max = 30.0;
  std::vector<double> pause_times{0.0, 100.0, 200.0};
  double duration = 900.0;
  double warmup = 50.0;
  std::size_t traffic_pairs = 10;
  double traffic_rate = 4.0;
  std::uint32_t packet_size = kDataPacketSize;
  std::vector<Protocol> protocols{Protocol::kAodv, Protocol::kDsr, Protocol::kDymo};
  std::vector<Variant> variants{Variant::kErs1, Variant::kErs2};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  double p_s = 1.0;
  std::string output_dir = "results";
  // analytic comparison: number of frozen topologies and the first seed
  std::size_t compare_topologies = 20;
  std::uint64_t compare_seed = 1;

  // Throws Error(kValidation) naming the offending field.
  void validate() const;

  SimConfig sim_config(Protocol protocol, Variant variant, double pause_time) const;
};

// Flat "key = value" lines. '#' starts a comment; lists are written
// "[a, b, c]". Unknown or repeated keys and malformed values raise
// Error(kParse) with the line number; the result is validated.
ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig parse_config(const std::filesystem::path& path);

}  // namespace ersim
