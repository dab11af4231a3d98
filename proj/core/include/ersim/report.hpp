#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ersim/experiment.hpp"

namespace ersim {

// Shortest decimal that reads back to the same double.
std::string format_double(double v);

// Header plus one line per row. Undefined metrics are empty fields; error
// text is quoted when it needs to be.
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::string to_csv(const std::vector<ResultRow>& rows);
// Inverse of write_csv. Throws Error(kParse) on malformed input.
std::vector<ResultRow> parse_csv(std::istream& in);

struct MetricSummary {
  std::size_t count = 0;     // cells contributing
  std::size_t excluded = 0;  // cells with an undefined value
  std::optional<double> mean;
  std::optional<double> sd;  // sample standard deviation, needs count >= 2
};

struct SummaryGroup {
  Protocol protocol = Protocol::kAodv;
  Variant variant = Variant::kErs1;
  double pause_time = 0.0;
  std::size_t errors = 0;
  MetricSummary throughput;
  MetricSummary e2ed;
  MetricSummary nrl;
};

// One group per (protocol, variant, pause), in cell order. Error rows are
// counted but contribute no values. Throws Error(kEmptyReport) on no rows.
std::vector<SummaryGroup> summarize(const std::vector<ResultRow>& rows);

// Groups as text, then ERS2 - ERS1 differences of the means for every
// (protocol, pause) with both variants present. A negative NRL or E2ED
// delta means ERS2 did better; a positive throughput delta likewise.
void write_summary(std::ostream& out, const std::vector<SummaryGroup>& groups);

void write_compare(std::ostream& out, const std::vector<CompareRow>& rows);

}  // namespace ersim
