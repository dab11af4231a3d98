#include "ersim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ersim/error.hpp"

namespace ersim {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    parse_error(line, std::string(key) + ": not a number: '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> parse_list(std::string_view value, std::size_t line,
                                         std::string_view key) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']')
    parse_error(line, std::string(key) + ": expected a list like [a, b]");
  std::vector<std::string_view> items;
  std::string_view inner = trim(value.substr(1, value.size() - 2));
  if (inner.empty()) return items;
  while (true) {
    const auto comma = inner.find(',');
    const auto item = trim(inner.substr(0, comma));
    if (item.empty()) parse_error(line, std::string(key) + ": empty list element");
    items.push_back(item);
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  return items;
}

template <typename T>
std::vector<T> parse_number_list(std::string_view value, std::size_t line, std::string_view key) {
  std::vector<T> out;
  for (auto item : parse_list(value, line, key)) out.push_back(parse_number<T>(item, line, key));
  return out;
}

void require(bool ok, const char* field, const std::string& why) {
  if (!ok) throw Error(ErrorCode::kValidation, std::string(field) + ": " + why);
}

}  // namespace

void ScenarioConfig::validate() const {
  require(nodes >= 1, "nodes", "must be >= 1");
  require(arena_width > 0, "arena_width", "must be > 0");
  require(arena_height > 0, "arena_height", "must be > 0");
  require(radio_range > 0, "radio_range", "must be > 0");
  require(v_max >= 0, "v_max", "must be >= 0");
  require(!pause_times.empty(), "pause_times", "must list at least one value");
  require(std::all_of(pause_times.begin(), pause_times.end(), [](double p) { return p >= 0; }),
          "pause_times", "values must be >= 0");
  require(warmup >= 0, "warmup", "must be >= 0");
  require(duration > warmup, "duration", "must exceed warmup");
  require(traffic_pairs >= 1, "traffic_pairs", "must be >= 1");
  require(traffic_pairs == 0 || nodes >= 2, "nodes", "traffic needs at least two nodes");
  require(traffic_rate > 0, "traffic_rate", "must be > 0");
  require(packet_size >= 1, "packet_size", "must be >= 1");
  require(!protocols.empty(), "protocols", "must list at least one protocol");
  require(!variants.empty(), "variants", "must list at least one variant");
  require(!seeds.empty(), "seeds", "must list at least one seed");
  require(p_s >= 0 && p_s <= 1, "p_s", "must lie in [0, 1]");
  require(compare_topologies >= 1, "compare_topologies", "must be >= 1");
}

SimConfig ScenarioConfig::sim_config(Protocol protocol, Variant variant, double pause_time) const {
  SimConfig c;
  c.protocol = protocol;
  c.variant = variant;
  c.nodes = nodes;
  c.arena = Arena{arena_width, arena_height, radio_range};
  c.v_max = v_max;
  c.pause_time = pause_time;
  c.duration = duration;
  c.warmup = warmup;
  c.traffic.pairs = traffic_pairs;
  c.traffic.rate = traffic_rate;
  c.traffic.packet_size = packet_size;
  c.agent.p_s = p_s;
  return c;
}

ScenarioConfig parse_config_text(std::string_view text) {
  ScenarioConfig c;
  using Setter = std::function<void(std::string_view, std::size_t)>;
  const std::map<std::string, Setter, std::less<>> setters{
      {"nodes", [&](auto v, auto l) { c.nodes = parse_number<std::size_t>(v, l, "nodes"); }},
      {"arena_width", [&](auto v, auto l) { c.arena_width = parse_number<double>(v, l, "arena_width"); }},
      {"arena_height", [&](auto v, auto l) { c.arena_height = parse_number<double>(v, l, "arena_height"); }},
      {"radio_range", [&](auto v, auto l) { c.radio_range = parse_number<double>(v, l, "radio_range"); }},
      {"v_max", [&](auto v, auto l) { c.v_max = parse_number<double>(v, l, "v_max"); }},
      {"pause_times", [&](auto v, auto l) { c.pause_times = parse_number_list<double>(v, l, "pause_times"); }},
      {"duration", [&](auto v, auto l) { c.duration = parse_number<double>(v, l, "duration"); }},
      {"warmup", [&](auto v, auto l) { c.warmup = parse_number<double>(v, l, "warmup"); }},
      {"traffic_pairs", [&](auto v, auto l) { c.traffic_pairs = parse_number<std::size_t>(v, l, "traffic_pairs"); }},
      {"traffic_rate", [&](auto v, auto l) { c.traffic_rate = parse_number<double>(v, l, "traffic_rate"); }},
      {"packet_size", [&](auto v, auto l) { c.packet_size = parse_number<std::uint32_t>(v, l, "packet_size"); }},
      {"protocols",
       [&](auto v, auto l) {
         c.protocols.clear();
         for (auto item : parse_list(v, l, "protocols")) {
           auto p = parse_protocol(item);
           if (!p) parse_error(l, "protocols: unknown protocol '" + std::string(item) + "'");
           c.protocols.push_back(*p);
         }
       }},
      {"variants",
       [&](auto v, auto l) {
         c.variants.clear();
         for (auto item : parse_list(v, l, "variants")) {
           auto p = parse_variant(item);
           if (!p) parse_error(l, "variants: unknown variant '" + std::string(item) + "'");
           c.variants.push_back(*p);
         }
       }},
      {"seeds", [&](auto v, auto l) { c.seeds = parse_number_list<std::uint64_t>(v, l, "seeds"); }},
      {"p_s", [&](auto v, auto l) { c.p_s = parse_number<double>(v, l, "p_s"); }},
      {"output_dir",
       [&](auto v, auto l) {
         if (v.empty()) parse_error(l, "output_dir: empty value");
         c.output_dir = std::string(v);
       }},
      {"compare_topologies",
       [&](auto v, auto l) { c.compare_topologies = parse_number<std::size_t>(v, l, "compare_topologies"); }},
      {"compare_seed", [&](auto v, auto l) { c.compare_seed = parse_number<std::uint64_t>(v, l, "compare_seed"); }},
  };

  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_error(line_no, "expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) parse_error(line_no, "unknown key '" + std::string(key) + "'");
    if (!seen.insert(std::string(key)).second)
      parse_error(line_no, "duplicate key '" + std::string(key) + "'");
    it->second(value, line_no);
  }
  c.validate();
  return c;
}

ScenarioConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str());
}

}  // namespace ersim
