#pragma once

// Cross-verification sweeps: every pair is decomposed by the engine and
// predicted by the oracle, and the two descriptors are compared over a common
// extension.  Each pair also gets the X+-cubed / X--cubed checks.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2c3/descriptor.hpp"
#include "sl2c3/oracle.hpp"
#include "sl2c3/sl2.hpp"

namespace sl2c3 {

/// 1, 2, every admissible T(b,c,d) and every Tt(b,1/b,0) over f, in that
/// order (parameters in code order).  Duals are isomorphic to members of the
/// list and are not repeated.  29 modules over GF(3), 737 over GF(9).
std::vector<ModuleParams> module_list(const Field& f);

using ParamPair = std::pair<ModuleParams, ModuleParams>;

/// All unordered pairs (i <= j) of module_list(f).
std::vector<ParamPair> all_pairs(const Field& f);

/// For every table row, the first unordered pair of module_list(f) that
/// lands in it (under the default reading).  Rows no pair reaches are
/// returned in `unreached`.
struct HittingSet {
  std::vector<ParamPair> pairs;
  std::vector<CaseId> unreached;
};
HittingSet hitting_set(const Field& f);

/// m pairs drawn uniformly (with replacement, ordered) from module_list(f).
std::vector<ParamPair> sample_pairs(const Field& f, int m, std::uint64_t seed);

struct PairRecord {
  ModuleParams left, right;
  int field_degree = 1;  // field the parameters were drawn from
  CaseId id;
  std::optional<Descriptor> engine, oracle;
  int engine_degree = 0, oracle_degree = 0;
  std::string engine_error, oracle_error;
  bool match = false;
  // X+^3 / X-^3 scalars: measured on the product versus the closed forms,
  // and highest (lowest) weight vectors present iff the scalar is zero.
  bool cube_match = false;
  bool hw_iff = false;
  bool lw_iff = false;
  double seconds = 0;

  bool ok() const { return match && cube_match && hw_iff && lw_iff; }
};

/// Runs both routes on each pair.  Results come back in input order for any
/// number of jobs.  With literal = true the oracle and the closed-form
/// scalars use the printed readings.
std::vector<PairRecord> run_pairs(const std::vector<ParamPair>& pairs, const Field& f, bool literal, int jobs);

PairRecord run_pair(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal);

/// A failure is explained by a misprint when its row is a misprint row, or
/// when only the X+^3 closed form failed on a T (x) T pair under the literal
/// reading of its subscript.
bool failure_is_misprint(const PairRecord& r, bool literal);

}  // namespace sl2c3
