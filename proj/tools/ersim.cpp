// Command line front end: parameter sweeps, the analytic comparison and
// schedule inspection.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ersim/config.hpp"
#include "ersim/error.hpp"
#include "ersim/experiment.hpp"
#include "ersim/report.hpp"

namespace fs = std::filesystem;
using namespace ersim;

namespace {

std::string cell_name(Protocol p, Variant v, double pause, std::uint64_t seed) {
  return std::string(to_string(p)) + "-" + std::string(to_string(v)) + "-p" +
         format_double(pause) + "-s" + std::to_string(seed);
}

int cmd_run(const std::string& config_path, std::string out_dir, bool trace, unsigned parallel) {
  const ScenarioConfig config = parse_config(config_path);
  if (out_dir.empty()) out_dir = config.output_dir;
  fs::create_directories(out_dir);
  if (trace) fs::create_directories(fs::path(out_dir) / "traces");

  CellRunner runner;
  if (trace) {
    runner = [&](const ScenarioConfig& c, Protocol p, Variant v, double pause, std::uint64_t seed) {
      std::ofstream file(fs::path(out_dir) / "traces" / (cell_name(p, v, pause, seed) + ".trace"));
      return run_cell(c, p, v, pause, seed,
                      [&file](const TraceRecord& r) { file << format_trace_line(r) << '\n'; });
    };
  }
  const auto rows = run_sweep(config, parallel, runner);

  std::ofstream csv(fs::path(out_dir) / "results.csv");
  write_csv(csv, rows);
  std::ofstream summary(fs::path(out_dir) / "summary.txt");
  write_summary(summary, summarize(rows));

  const auto failed = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.error.empty(); });
  std::cout << rows.size() << " cells, " << failed << " failed; results in " << out_dir << '\n';
  for (const auto& r : rows)
    if (!r.error.empty())
      std::cerr << cell_name(r.protocol, r.variant, r.pause_time, r.seed) << ": " << r.error << '\n';
  return failed == 0 ? 0 : 3;
}

int cmd_compare(const std::string& config_path) {
  const auto rows = analytic_compare(parse_config(config_path));
  write_compare(std::cout, rows);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(r.census_error()));
  std::cerr << rows.size() << " rings compared; largest census error " << format_double(worst) << '\n';
  return 0;
}

int cmd_schedule(const std::string& protocol_text, const std::string& variant_text) {
  const auto protocol = parse_protocol(protocol_text);
  const auto variant = parse_variant(variant_text);
  if (!protocol) throw Error(ErrorCode::kInvalidArgument, "unknown protocol '" + protocol_text + "'");
  if (!variant) throw Error(ErrorCode::kInvalidArgument, "unknown variant '" + variant_text + "'");
  const ErsParams params = ErsParams::preset(*protocol, *variant);
  const TtlSchedule first = build_schedule(*protocol, *variant, params);
  const TtlSchedule walk = discovery_schedule(*protocol, *variant, params);

  std::cout << to_string(*protocol) << '-' << to_string(*variant) << " schedule [";
  for (std::size_t i = 0; i < first.size(); ++i) std::cout << (i ? ", " : "") << first.rings[i];
  std::cout << "]\nring ttl wait_ms\n";
  for (std::size_t i = 0; i < walk.size(); ++i) {
    std::cout << i + 1 << ' ' << walk.rings[i] << ' '
              << format_double(ring_wait(walk, i, params).count() / 1000.0) << '\n';
  }
  std::cout << "total_ms " << format_double(schedule_wait(walk, params).count() / 1000.0) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expanding ring search model and MANET routing simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir, protocol, variant;
  bool trace = false;
  unsigned parallel = 1;

  auto* run = app.add_subcommand("run", "Run the configured sweep and write CSV and summary");
  run->add_option("--config", config_path, "Scenario file")->required();
  run->add_option("--out", out_dir, "Output directory (default: output_dir from the config)");
  run->add_flag("--trace", trace, "Write a per-cell event trace");
  run->add_option("--parallel", parallel, "Cells run concurrently")->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "Analytic versus simulated ring costs and waits");
  compare->add_option("--config", config_path, "Scenario file")->required();

  auto* schedule = app.add_subcommand("schedule", "Print a TTL schedule with per-ring waits");
  schedule->add_option("--protocol", protocol, "aodv, dsr or dymo")->required();
  schedule->add_option("--variant", variant, "ers1 or ers2")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(config_path, out_dir, trace, parallel);
    if (*compare) return cmd_compare(config_path);
    return cmd_schedule(protocol, variant);
  } catch (const Error& e) {
    std::cerr << "ersim: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ersim: " << e.what() << '\n';
    return 2;
  }
}
