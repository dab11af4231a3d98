#include "ersim/report.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ersim/error.hpp"

namespace ersim {

namespace {

constexpr const char* kHeader =
    "protocol,variant,pause_time,seed,throughput_bps,e2ed_s,nrl,discovery_successes,"
    "discovery_failures,analytic_bm,simulated_rreq,error";
constexpr std::size_t kColumns = 12;

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

// Splits one CSV record; handles quoted fields that may contain commas,
// doubled quotes and newlines (pulling further lines from `in`).
std::vector<std::string> split_record(std::string line, std::istream& in, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0;; ++i) {
    if (i == line.size()) {
      if (!quoted) break;
      std::string more;
      if (!std::getline(in, more))
        throw Error(ErrorCode::kParse, "csv line " + std::to_string(line_no) + ": unterminated quote");
      line += '\n' + more;
    }
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T parse_field(const std::string& text, std::size_t line_no, const char* column) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw Error(ErrorCode::kParse, "csv line " + std::to_string(line_no) + ": bad " + column +
                                       " '" + text + "'");
  return value;
}

std::optional<double> parse_optional(const std::string& text, std::size_t line_no,
                                     const char* column) {
  if (text.empty()) return std::nullopt;
  return parse_field<double>(text, line_no, column);
}

MetricSummary summarize_metric(const std::vector<std::optional<double>>& values) {
  MetricSummary s;
  double sum = 0.0;
  for (const auto& v : values) {
    if (!v) {
      ++s.excluded;
      continue;
    }
    ++s.count;
    sum += *v;
  }
  if (s.count == 0) return s;
  const double mean = sum / static_cast<double>(s.count);
  s.mean = mean;
  if (s.count >= 2) {
    double sq = 0.0;
    for (const auto& v : values)
      if (v) sq += (*v - mean) * (*v - mean);
    s.sd = std::sqrt(sq / static_cast<double>(s.count - 1));
  }
  return s;
}

std::string describe(const MetricSummary& m) {
  if (!m.mean) return "undefined (" + std::to_string(m.excluded) + " excluded)";
  std::ostringstream out;
  out << format_double(*m.mean);
  if (m.sd) out << " +- " << format_double(*m.sd);
  out << " (n=" << m.count;
  if (m.excluded > 0) out << ", " << m.excluded << " excluded";
  out << ')';
  return out.str();
}

std::string delta(const MetricSummary& ers1, const MetricSummary& ers2) {
  if (!ers1.mean || !ers2.mean) return "undefined";
  return format_double(*ers2.mean - *ers1.mean);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kHeader << '\n';
  for (const auto& r : rows) {
    out << to_string(r.protocol) << ',' << to_string(r.variant) << ','
        << format_double(r.pause_time) << ',' << r.seed << ',' << format_double(r.throughput) << ','
        << optional_field(r.e2ed) << ',' << optional_field(r.nrl) << ',' << r.discovery_successes
        << ',' << r.discovery_failures << ',' << optional_field(r.analytic_bm) << ','
        << optional_field(r.simulated_rreq) << ',' << quote(r.error) << '\n';
  }
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

std::vector<ResultRow> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw Error(ErrorCode::kParse, "csv line 1: missing or unexpected header");
  std::vector<ResultRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_record(line, in, line_no);
    if (f.size() != kColumns)
      throw Error(ErrorCode::kParse, "csv line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(kColumns) + " fields");
    ResultRow r;
    auto p = parse_protocol(f[0]);
    auto v = parse_variant(f[1]);
    if (!p || !v) throw Error(ErrorCode::kParse, "csv line " + std::to_string(line_no) + ": bad cell key");
    r.protocol = *p;
    r.variant = *v;
    r.pause_time = parse_field<double>(f[2], line_no, "pause_time");
    r.seed = parse_field<std::uint64_t>(f[3], line_no, "seed");
    r.throughput = parse_field<double>(f[4], line_no, "throughput_bps");
    r.e2ed = parse_optional(f[5], line_no, "e2ed_s");
    r.nrl = parse_optional(f[6], line_no, "nrl");
    r.discovery_successes = parse_field<std::uint64_t>(f[7], line_no, "discovery_successes");
    r.discovery_failures = parse_field<std::uint64_t>(f[8], line_no, "discovery_failures");
    r.analytic_bm = parse_optional(f[9], line_no, "analytic_bm");
    r.simulated_rreq = parse_optional(f[10], line_no, "simulated_rreq");
    r.error = f[11];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<SummaryGroup> summarize(const std::vector<ResultRow>& rows) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyReport, "no result rows to report");
  using Key = std::tuple<Protocol, Variant, double>;
  struct Values {
    std::size_t errors = 0;
    std::vector<std::optional<double>> throughput, e2ed, nrl;
  };
  std::map<Key, Values> groups;
  for (const auto& r : rows) {
    auto& g = groups[{r.protocol, r.variant, r.pause_time}];
    if (!r.error.empty()) {
      ++g.errors;
      continue;
    }
    g.throughput.emplace_back(r.throughput);
    g.e2ed.push_back(r.e2ed);
    g.nrl.push_back(r.nrl);
  }
  std::vector<SummaryGroup> out;
  for (const auto& [key, g] : groups) {
    SummaryGroup s;
    std::tie(s.protocol, s.variant, s.pause_time) = key;
    s.errors = g.errors;
    s.throughput = summarize_metric(g.throughput);
    s.e2ed = summarize_metric(g.e2ed);
    s.nrl = summarize_metric(g.nrl);
    out.push_back(std::move(s));
  }
  return out;
}

void write_summary(std::ostream& out, const std::vector<SummaryGroup>& groups) {
  for (const auto& g : groups) {
    out << to_string(g.protocol) << '-' << to_string(g.variant) << " pause "
        << format_double(g.pause_time) << " s";
    if (g.errors > 0) out << " [" << g.errors << " failed cells]";
    out << "\n  throughput bit/s: " << describe(g.throughput) << "\n  e2ed s: " << describe(g.e2ed)
        << "\n  nrl: " << describe(g.nrl) << '\n';
  }
  std::map<std::pair<Protocol, double>, std::pair<const SummaryGroup*, const SummaryGroup*>> pairs;
  for (const auto& g : groups) {
    auto& slot = pairs[{g.protocol, g.pause_time}];
    (g.variant == Variant::kErs1 ? slot.first : slot.second) = &g;
  }
  bool header = false;
  for (const auto& [key, slot] : pairs) {
    if (slot.first == nullptr || slot.second == nullptr) continue;
    if (!header) {
      out << "\nERS2 - ERS1 (negative nrl/e2ed and positive throughput favour ERS2)\n";
      header = true;
    }
    out << to_string(key.first) << " pause " << format_double(key.second)
        << " s: throughput " << delta(slot.first->throughput, slot.second->throughput)
        << ", e2ed " << delta(slot.first->e2ed, slot.second->e2ed) << ", nrl "
        << delta(slot.first->nrl, slot.second->nrl) << '\n';
  }
}

void write_compare(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << "protocol,variant,topology,ring,ttl,census_cost,model_cost,simulated_rreq,census_error,"
         "model_error,analytic_wait_us,simulated_wait_us\n";
  for (const auto& r : rows) {
    out << to_string(r.protocol) << ',' << to_string(r.variant) << ',' << r.topology << ','
        << r.ring << ',' << r.ttl << ',' << format_double(r.census_cost) << ','
        << format_double(r.model_cost) << ',' << r.simulated_rreq << ','
        << format_double(r.census_error()) << ',' << format_double(r.model_error()) << ','
        << r.analytic_wait.count() << ',';
    if (r.simulated_wait) out << r.simulated_wait->count();
    out << '\n';
  }
}

}  // namespace ersim
