#pragma once

// JSON encoding of sweep results and the text summaries built from it.
// Reports are plain nlohmann::json values; object keys are sorted, so a
// report dumps to the same bytes whenever its contents are equal.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2c3/oracle.hpp"
#include "sl2c3/verify.hpp"

namespace sl2char3 {

using nlohmann::json;

json case_json(const sl2c3::CaseId& id);

/// One record.  Wall time is included only when with_timing is set.
json record_json(const sl2c3::PairRecord& r, bool literal, bool with_timing);

struct ReportInfo {
  int field = 1;
  std::string scope;
  unsigned long long seed = 0;
  bool literal = false;
  bool with_timing = false;
  double wall_seconds = 0;
  std::vector<sl2c3::CaseId> unreached;  // rows the hitting set could not reach
};

/// Full report: settings, summary counts, per-row coverage, the failing
/// records, a counterexample per misprint row and every record.
json build_report(const std::vector<sl2c3::PairRecord>& records, const ReportInfo& info);

/// Number of failures not explained by a documented misprint.
long long unexplained_failures(const json& report);

/// Human-readable summary of a report produced by build_report().
void print_summary(std::ostream& os, const json& report);

/// The table rows as JSON lines, or as aligned text.
void print_tables(std::ostream& os, bool as_json);

}  // namespace sl2char3
