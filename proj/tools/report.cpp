#include "report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace sl2char3 {

using sl2c3::CaseId;
using sl2c3::PairRecord;

namespace {

json descriptor_or_null(const std::optional<sl2c3::Descriptor>& d) {
  return d ? json::parse(d->json()) : json(nullptr);
}

// Display width of a UTF-8 string, counting code points.
std::size_t width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++n;
  return n;
}

std::string pad(const std::string& s, std::size_t w) {
  const std::size_t n = width(s);
  return n >= w ? s : s + std::string(w - n, ' ');
}

}  // namespace

json case_json(const CaseId& id) { return {{"table", id.table}, {"row", id.row}}; }

json record_json(const PairRecord& r, bool literal, bool with_timing) {
  json j = {
      {"left", r.left.str()},
      {"right", r.right.str()},
      {"field", r.field_degree},
      {"case", case_json(r.id)},
      {"engine", descriptor_or_null(r.engine)},
      {"oracle", descriptor_or_null(r.oracle)},
      {"engine_pretty", r.engine ? r.engine->pretty() : ""},
      {"oracle_pretty", r.oracle ? r.oracle->pretty() : ""},
      {"engine_field", r.engine_degree},
      {"oracle_field", r.oracle_degree},
      {"match", r.match},
      {"cube_match", r.cube_match},
      {"hw_iff", r.hw_iff},
      {"lw_iff", r.lw_iff},
      {"ok", r.ok()},
  };
  if (!r.engine_error.empty()) j["engine_error"] = r.engine_error;
  if (!r.oracle_error.empty()) j["oracle_error"] = r.oracle_error;
  if (!r.ok()) j["explained"] = sl2c3::failure_is_misprint(r, literal);
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

json build_report(const std::vector<PairRecord>& records, const ReportInfo& info) {
  json recs = json::array();
  json failures = json::array();
  std::map<CaseId, std::pair<long long, long long>> per_row;  // pairs, failures
  std::map<CaseId, json> counterexample;
  long long matches = 0, cube_failures = 0, hwlw_failures = 0, explained = 0;

  for (const auto& r : records) {
    json j = record_json(r, info.literal, info.with_timing);
    auto& cell = per_row[r.id];
    ++cell.first;
    if (r.match) ++matches;
    if (!r.cube_match) ++cube_failures;
    if (!r.hw_iff || !r.lw_iff) ++hwlw_failures;
    if (!r.ok()) {
      ++cell.second;
      if (j.at("explained").get<bool>()) ++explained;
      if (info.literal && sl2c3::is_misprint_row(r.id) && !counterexample.count(r.id))
        counterexample[r.id] = {{"left", r.left.str()}, {"right", r.right.str()}, {"field", r.field_degree}};
      failures.push_back(j);
    }
    recs.push_back(std::move(j));
  }

  json coverage = json::array();
  for (const auto& row : sl2c3::table_rows()) {
    const auto it = per_row.find(row.id);
    json c = case_json(row.id);
    c["pairs"] = it == per_row.end() ? 0 : it->second.first;
    c["failures"] = it == per_row.end() ? 0 : it->second.second;
    c["misprint"] = sl2c3::is_misprint_row(row.id);
    coverage.push_back(std::move(c));
  }

  json misprints = json::array();
  if (info.literal)
    for (const auto& row : sl2c3::table_rows()) {
      if (row.literal.empty()) continue;
      json m = case_json(row.id);
      const auto it = counterexample.find(row.id);
      m["counterexample"] = it == counterexample.end() ? json(nullptr) : it->second;
      misprints.push_back(std::move(m));
    }

  json unreached = json::array();
  for (const auto& id : info.unreached) unreached.push_back(case_json(id));

  const long long total = static_cast<long long>(records.size());
  const long long failed = static_cast<long long>(failures.size());
  json report = {
      {"field", info.field},
      {"scope", info.scope},
      {"seed", info.seed},
      {"reading", info.literal ? "literal" : "default"},
      {"summary",
       {{"pairs", total},
        {"matches", matches},
        {"mismatches", total - matches},
        {"cube_failures", cube_failures},
        {"hw_lw_failures", hwlw_failures},
        {"failures", failed},
        {"explained", explained},
        {"unexplained", failed - explained}}},
      {"coverage", coverage},
      {"unreached", unreached},
      {"failures", failures},
      {"misprint_counterexamples", misprints},
      {"records", recs},
  };
  if (info.with_timing) report["wall_seconds"] = info.wall_seconds;
  return report;
}

long long unexplained_failures(const json& report) { return report.at("summary").at("unexplained").get<long long>(); }

void print_summary(std::ostream& os, const json& report) {
  if (!report.is_object() || !report.contains("summary")) {
    os << "0 pairs\n";
    return;
  }
  const json& s = report.at("summary");
  const int k = report.value("field", 1);
  os << "field GF(3^" << k << ")  scope " << report.value("scope", "?") << "  seed " << report.value("seed", 0ULL)
     << "  reading " << report.value("reading", "default") << "\n";
  os << s.at("pairs").get<long long>() << " pairs, " << s.at("mismatches").get<long long>() << " descriptor mismatches, "
     << s.at("cube_failures").get<long long>() << " cube-scalar failures, " << s.at("hw_lw_failures").get<long long>()
     << " weight-vector failures\n";
  os << s.at("failures").get<long long>() << " failing pairs: " << s.at("explained").get<long long>()
     << " explained by misprints, " << s.at("unexplained").get<long long>() << " unexplained\n";

  if (s.at("pairs").get<long long>() == 0) return;

  os << "\nrow coverage\n";
  std::vector<std::string> uncovered;
  for (const auto& c : report.at("coverage")) {
    const std::string name = c.at("table").get<std::string>() + ": " + c.at("row").get<std::string>();
    const long long n = c.at("pairs").get<long long>(), bad = c.at("failures").get<long long>();
    if (n == 0) uncovered.push_back(name);
    os << "  " << pad(name, 64) << std::setw(7) << n << std::setw(7) << bad << (c.value("misprint", false) ? "  *" : "")
       << "\n";
  }
  os << "  (columns: pairs, failures; * marks a row with a documented misprint)\n";

  if (!uncovered.empty()) {
    os << "\nuncovered rows\n";
    for (const auto& u : uncovered) os << "  " << u << "\n";
  }
  if (!report.at("unreached").empty()) {
    os << "\nrows no pair over this field reaches\n";
    for (const auto& u : report.at("unreached"))
      os << "  " << u.at("table").get<std::string>() << ": " << u.at("row").get<std::string>() << "\n";
  }

  const json& failures = report.at("failures");
  if (!failures.empty()) {
    constexpr std::size_t kShown = 40;
    os << "\nfailures" << (failures.size() > kShown ? " (first " + std::to_string(kShown) + ")" : "") << "\n";
    std::size_t shown = 0;
    for (const auto& r : failures) {
      if (shown++ == kShown) break;
      os << "  " << r.at("left").get<std::string>() << " (x) " << r.at("right").get<std::string>() << "  ["
         << r.at("case").at("table").get<std::string>() << ": " << r.at("case").at("row").get<std::string>() << "]"
         << (r.value("explained", false) ? "  explained" : "") << "\n";
      std::string e = r.at("engine_pretty").get<std::string>();
      std::string o = r.at("oracle_pretty").get<std::string>();
      if (e.empty()) e = "error: " + r.value("engine_error", std::string());
      if (o.empty()) o = "error: " + r.value("oracle_error", std::string());
      os << "    " << pad("engine", 39) << " | oracle\n";
      os << "    " << pad(e, 39) << " | " << o << "\n";
      if (!r.at("cube_match").get<bool>()) os << "    cube scalars differ from the closed forms\n";
      if (!r.at("hw_iff").get<bool>() || !r.at("lw_iff").get<bool>())
        os << "    weight vectors disagree with the cube scalars\n";
    }
  }

  const json& mp = report.at("misprint_counterexamples");
  if (!mp.empty()) {
    os << "\nmisprint rows\n";
    for (const auto& m : mp) {
      os << "  " << pad(m.at("table").get<std::string>() + ": " + m.at("row").get<std::string>(), 64);
      if (m.at("counterexample").is_null())
        os << "no counterexample in this run\n";
      else
        os << m.at("counterexample").at("left").get<std::string>() << " (x) "
           << m.at("counterexample").at("right").get<std::string>() << "\n";
    }
  }

  if (report.contains("wall_seconds")) {
    double slowest = 0;
    std::string which;
    for (const auto& r : report.at("records"))
      if (r.contains("seconds") && r.at("seconds").get<double>() > slowest) {
        slowest = r.at("seconds").get<double>();
        which = r.at("left").get<std::string>() + " (x) " + r.at("right").get<std::string>();
      }
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << report.at("wall_seconds").get<double>() << " s wall, slowest pair "
      << slowest << " s (" << which << ")";
    os << "\ntiming: " << t.str() << "\n";
  } else {
    os << "\ntiming: not recorded (run verify with --timing)\n";
  }
}

void print_tables(std::ostream& os, bool as_json) {
  for (const auto& row : sl2c3::table_rows()) {
    if (as_json) {
      json j = case_json(row.id);
      j["decomposition"] = row.decomposition;
      j["literal"] = row.literal.empty() ? json(nullptr) : json(row.literal);
      os << j.dump() << "\n";
      continue;
    }
    os << pad(row.id.table, 4) << pad(row.id.row, 60) << row.decomposition << "\n";
    if (!row.literal.empty()) os << std::string(64, ' ') << "printed: " << row.literal << "\n";
  }
}

}  // namespace sl2char3
