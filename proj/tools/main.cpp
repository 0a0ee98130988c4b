// sl2char3: decompose tensor products of sl(2)-modules over GF(3^k) and
// cross-check the structural engine against the closed-form tables.
//
// Exit codes: 0 match / success, 1 mismatch, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "report.hpp"
#include "sl2c3/decompose.hpp"
#include "sl2c3/oracle.hpp"
#include "sl2c3/tensor.hpp"
#include "sl2c3/verify.hpp"

namespace {

using namespace sl2c3;
using sl2char3::json;

constexpr int kMatch = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string field_note(int deg, int base) {
  if (deg == base) return "";
  return "  (needs " + gf(deg).name() + ", computed there)";
}

// ---------------------------------------------------------------- decompose

struct DecomposeOpts {
  std::string left, right;
  int field = 1;
  bool json = false, engine_only = false, oracle_only = false, literal = false;
};

int cmd_decompose(const DecomposeOpts& o) {
  const Field& f = gf(o.field);
  ModuleParams l, r;
  try {
    l = parse_module_params(f, o.left);
    r = parse_module_params(f, o.right);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  json out = {{"left", l.str()}, {"right", r.str()}, {"field", o.field}};
  std::optional<Decomposition> eng;
  std::string eng_error;
  std::optional<Prediction> pred;
  int code = kMatch;

  if (o.engine_only) {
    try {
      eng = decompose_lifting(tensor(build(l, f), build(r, f)));
    } catch (const Error& e) {
      eng_error = e.what();
      code = kMismatch;
    }
    out["engine"] = eng ? json::parse(eng->descriptor.json()) : json(nullptr);
    out["engine_field"] = eng ? eng->field_degree : 0;
    if (!eng_error.empty()) out["engine_error"] = eng_error;
  } else if (o.oracle_only) {
    pred = predict(l, r, f, o.literal);
    out["case"] = sl2char3::case_json(pred->id);
    out["oracle"] = pred->descriptor ? json::parse(pred->descriptor->json()) : json(nullptr);
    out["oracle_field"] = pred->field_degree;
    if (!pred->error.empty()) out["oracle_error"] = pred->error;
    if (!pred->descriptor) code = kMismatch;
  } else {
    const PairRecord rec = run_pair(l, r, f, o.literal);
    out = sl2char3::record_json(rec, o.literal, false);
    code = rec.ok() ? kMatch : kMismatch;
  }

  if (o.json) {
    std::cout << out.dump() << "\n";
    return code;
  }

  std::cout << "field   " << f.name() << "\n";
  std::cout << "left    " << l.str() << "\n";
  std::cout << "right   " << r.str() << "\n";
  if (o.engine_only) {
    if (eng)
      std::cout << "engine  " << eng->descriptor.pretty() << field_note(eng->field_degree, o.field) << "\n";
    else
      std::cout << "engine  error: " << eng_error << "\n";
    return code;
  }
  if (o.oracle_only) {
    std::cout << "case    " << pred->id.str() << "\n";
    if (pred->descriptor)
      std::cout << "oracle  " << pred->descriptor->pretty() << field_note(pred->field_degree, o.field) << "\n";
    else
      std::cout << "oracle  error: " << pred->error << "\n";
    return code;
  }

  std::cout << "case    " << out["case"]["table"].get<std::string>() << ": " << out["case"]["row"].get<std::string>()
            << "\n";
  const auto route = [&](const char* name) {
    const std::string p = out[std::string(name) + "_pretty"];
    if (!p.empty())
      std::cout << name << "  " << p << field_note(out[std::string(name) + "_field"].get<int>(), o.field) << "\n";
    else
      std::cout << name << "  error: " << out.value(std::string(name) + "_error", std::string()) << "\n";
  };
  route("engine");
  route("oracle");
  if (!out["cube_match"].get<bool>()) std::cout << "note    X+^3 / X-^3 differ from the closed forms\n";
  if (!out["hw_iff"].get<bool>() || !out["lw_iff"].get<bool>())
    std::cout << "note    weight vectors disagree with the cube scalars\n";
  std::cout << "verdict " << (code == kMatch ? "match" : "mismatch") << "\n";
  return code;
}

// ------------------------------------------------------------------- verify

struct VerifyOpts {
  int field = 1;
  std::string scope;
  unsigned long long seed = 1;
  int jobs = 1;
  std::string out;
  bool literal = false, timing = false, quiet = false;
};

constexpr int kDefaultSample = 10000;

int cmd_verify(const VerifyOpts& o) {
  if (o.field != 1 && o.field != 2) throw UsageError("verify supports --field 1 or 2");
  const Field& f = gf(o.field);
  std::string scope = o.scope.empty() ? (o.field == 1 ? "all" : "sample:" + std::to_string(kDefaultSample)) : o.scope;

  std::vector<ParamPair> pairs;
  std::string table_filter;
  const auto sampled = [&](int m) {
    const HittingSet hs = hitting_set(f);
    std::vector<ParamPair> v = hs.pairs;
    const auto extra = sample_pairs(f, m, o.seed);
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };

  if (scope == "all") {
    pairs = all_pairs(f);
  } else if (scope.rfind("table:", 0) == 0) {
    table_filter = scope.substr(6);
    static const std::vector<std::string> known = {"thm", "2", "3", "4", "5", "5a", "5b"};
    if (std::find(known.begin(), known.end(), table_filter) == known.end())
      throw UsageError("unknown table '" + table_filter + "' (thm, 2, 3, 4, 5, 5a, 5b)");
    const auto all = o.field == 1 ? all_pairs(f) : sampled(kDefaultSample);
    for (const auto& p : all) {
      const std::string t = classify(p.first, p.second, f, o.literal).table;
      if (t == table_filter || (table_filter == "5" && t.rfind("5", 0) == 0)) pairs.push_back(p);
    }
  } else if (scope.rfind("sample:", 0) == 0) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(scope.substr(7), &used);
      if (used != scope.size() - 7 || m < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("bad sample size in '" + scope + "'");
    }
    pairs = sampled(m);
  } else {
    throw UsageError("scope must be all, table:N or sample:M");
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto records = run_pairs(pairs, f, o.literal, o.jobs);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  sl2char3::ReportInfo info;
  info.field = o.field;
  info.scope = scope;
  info.seed = o.seed;
  info.literal = o.literal;
  info.with_timing = o.timing;
  info.wall_seconds = wall;
  if (table_filter.empty()) info.unreached = hitting_set(f).unreached;
  const json report = sl2char3::build_report(records, info);

  if (!o.out.empty()) {
    std::ofstream os(o.out, std::ios::binary);
    if (!os) throw UsageError("cannot write " + o.out);
    os << report.dump(1) << "\n";
  }
  if (!o.quiet) sl2char3::print_summary(std::cout, report);
  return sl2char3::unexplained_failures(report) == 0 ? kMatch : kMismatch;
}

// ------------------------------------------------------------------- report

int cmd_report(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read " + path);
  json report;
  try {
    const std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    report = text.find_first_not_of(" \t\r\n") == std::string::npos ? json::object() : json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
  sl2char3::print_summary(std::cout, report);
  if (!report.is_object() || !report.contains("summary")) return kMatch;
  return sl2char3::unexplained_failures(report) == 0 ? kMatch : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tensor products of sl(2)-modules over GF(3^k): structural decomposition and table cross-checks"};
  app.require_subcommand(1);

  DecomposeOpts dopt;
  auto* dec = app.add_subcommand("decompose", "Decompose left (x) right by the engine and the tables");
  dec->add_option("left", dopt.left, "One | Two | T(b,c,d) | Tt(b,c,d) | Dual(expr)")->required();
  dec->add_option("right", dopt.right, "Second factor, same grammar")->required();
  dec->add_option("--field", dopt.field, "Work over GF(3^k)")->check(CLI::Range(1, 6));
  dec->add_flag("--json", dopt.json, "Print one JSON object");
  auto* eo = dec->add_flag("--engine-only", dopt.engine_only, "Run only the structural engine");
  auto* oo = dec->add_flag("--oracle-only", dopt.oracle_only, "Consult only the tables");
  eo->excludes(oo);
  dec->add_flag("--paper-literal", dopt.literal, "Read the tables as printed, misprints included");

  VerifyOpts vopt;
  auto* ver = app.add_subcommand("verify", "Sweep pairs through both routes");
  ver->add_option("--field", vopt.field, "1 (exhaustive by default) or 2 (sampled by default)");
  ver->add_option("--scope", vopt.scope, "all | table:N | sample:M");
  ver->add_option("--seed", vopt.seed, "Seed for sample:M");
  ver->add_option("--jobs", vopt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--out", vopt.out, "Write the JSON report here");
  ver->add_flag("--paper-literal", vopt.literal, "Read the tables as printed, misprints included");
  ver->add_flag("--timing", vopt.timing, "Record wall times in the report (makes it run-dependent)");
  ver->add_flag("--quiet", vopt.quiet, "Do not print the summary");

  std::string report_path;
  auto* rep = app.add_subcommand("report", "Summarize a JSON report");
  rep->add_option("file", report_path, "Report written by verify --out")->required();

  std::string emit;
  auto* tab = app.add_subcommand("tables", "List every table row");
  tab->add_option("--emit", emit, "json: one JSON object per line")->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*dec) return cmd_decompose(dopt);
    if (*ver) return cmd_verify(vopt);
    if (*rep) return cmd_report(report_path);
    if (*tab) {
      sl2char3::print_tables(std::cout, emit == "json");
      return kMatch;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  }
  return kUsage;
}
