#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ersim/config.hpp"
#include "ersim/error.hpp"

using namespace ersim;

namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_config_text(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kInvalidArgument;
}

std::string message_of(std::string_view text) {
  try {
    parse_config_text(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, EmptyTextGivesDefaults) {
  const auto c = parse_config_text("");
  EXPECT_EQ(c.nodes, 50u);
  EXPECT_EQ(c.pause_times, (std::vector<double>{0, 100, 200}));
  EXPECT_EQ(c.seeds.size(), 5u);
  EXPECT_EQ(c.protocols.size(), 3u);
  EXPECT_EQ(c.variants.size(), 2u);
  EXPECT_EQ(c.duration, 900.0);
  EXPECT_EQ(c.warmup, 50.0);
}

TEST(Config, ParsesValuesListsAndComments) {
  const auto c = parse_config_text(R"(
# short sweep
nodes = 20
pause_times = [0]   # only the fastest mobility
protocols = [dsr, aodv]
variants = [ERS2]
seeds = [7, 8]
duration = 120.5
output_dir = out/a
)");
  EXPECT_EQ(c.nodes, 20u);
  EXPECT_EQ(c.pause_times, std::vector<double>{0.0});
  EXPECT_EQ(c.protocols, (std::vector<Protocol>{Protocol::kDsr, Protocol::kAodv}));
  EXPECT_EQ(c.variants, std::vector<Variant>{Variant::kErs2});
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{7, 8}));
  EXPECT_EQ(c.duration, 120.5);
  EXPECT_EQ(c.output_dir, "out/a");
}

TEST(Config, ValidationNamesField) {
  EXPECT_EQ(code_of("duration = 40\nwarmup = 50\n"), ErrorCode::kValidation);
  EXPECT_NE(message_of("duration = 40\nwarmup = 50\n").find("duration"), std::string::npos);
  EXPECT_NE(message_of("nodes = 1").find("nodes"), std::string::npos);
  EXPECT_NE(message_of("p_s = 1.5").find("p_s"), std::string::npos);
  EXPECT_NE(message_of("seeds = []").find("seeds"), std::string::npos);
}

TEST(Config, ParseErrorsCarryLineNumbers) {
  EXPECT_EQ(code_of("nodes = 10\nbogus = 3\n"), ErrorCode::kParse);
  EXPECT_NE(message_of("nodes = 10\nbogus = 3\n").find("line 2"), std::string::npos);
  EXPECT_NE(message_of("nodes = 10\n\nnodes = 11\n").find("line 3"), std::string::npos);
  EXPECT_EQ(code_of("pause_times = [0, 100"), ErrorCode::kParse);
  EXPECT_EQ(code_of("pause_times = [0,, 100]"), ErrorCode::kParse);
  EXPECT_EQ(code_of("nodes = ten"), ErrorCode::kParse);
  EXPECT_EQ(code_of("protocols = [olsr]"), ErrorCode::kParse);
  EXPECT_EQ(code_of("nodes 10"), ErrorCode::kParse);
}

TEST(Config, SimConfigCarriesScenario) {
  auto c = parse_config_text("nodes = 30\nv_max = 5\ntraffic_pairs = 3\np_s = 0.5\n");
  const auto s = c.sim_config(Protocol::kDymo, Variant::kErs2, 100.0);
  EXPECT_EQ(s.nodes, 30u);
  EXPECT_EQ(s.v_max, 5.0);
  EXPECT_EQ(s.pause_time, 100.0);
  EXPECT_EQ(s.traffic.pairs, 3u);
  EXPECT_EQ(s.agent.p_s, 0.5);
  EXPECT_EQ(s.protocol, Protocol::kDymo);
  EXPECT_EQ(s.variant, Variant::kErs2);
}

TEST(Config, ReadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "ersim_config_test.conf";
  std::ofstream(path) << "nodes = 12\n";
  EXPECT_EQ(parse_config(path).nodes, 12u);
  std::filesystem::remove(path);
  EXPECT_THROW(parse_config(path), Error);
}
