#pragma once

// Checks shared by the gtest suites and the acceptance binary.  Each check
// runs a family of cases and counts failures; the first failure is kept as
// a readable witness.

#include <cstdint>
#include <string>
#include <vector>

#include "sl2c3/field.hpp"
#include "sl2c3/linalg.hpp"
#include "sl2c3/sl2.hpp"
#include "sl2c3/verify.hpp"

namespace sl2c3::checks {

struct Result {
  long long cases = 0;
  long long failures = 0;
  std::string witness;

  void fail(const std::string& what);
  void merge(const Result& o);
  bool ok() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

/// Cases are every triple of f^3 when sample == 0, else `sample` seeded
/// random triples.
struct Scope {
  int sample = 0;
  std::uint64_t seed = 1;
};

// Isomorphism certificates.

/// S invertible and S X = X' S for X = X-, H, X+.
bool conjugates(const Mat& s, const Rep& from, const Rep& to);
/// An explicit intertwiner found by search and checked with conjugates().
bool certify_isomorphic(const Rep& a, const Rep& b);
/// No invertible intertwiner: the hom space is zero, or the exhaustive
/// search over it finds none.
bool certify_not_isomorphic(const Rep& a, const Rep& b);

// Lemmas on the 3-dimensional families.

/// Every irreducible T(b,c,d) and Tt(b,c,d) is isomorphic to its canonical
/// representative (a T or some Tt(b0,1/b0,0)); distinct representatives
/// are pairwise non-isomorphic.
Result lemma_families(const Field& f, Scope scope);
/// T*(b,c,d) ~ T(-b,-c,-d) and Tt*(b,c,d) ~ Tt(-b,-c,-d), through the
/// anti-diagonal S = [[0,0,1],[0,-1,0],[1,0,0]].
Result lemma_duals(const Field& f, Scope scope);
/// Tt(b,c,d) ~ some T exactly when at most one of a1, a2, b vanishes; the
/// three explicit S matrices for the isomorphic cases, intertwiner absence
/// against every admissible T otherwise.
Result lemma_ttilde(const Field& f, Scope scope);
/// Two of a1, a2, b zero: Tt(b,c,d) ~ Tt(b0,1/b0,0).
Result lemma_twozeros(const Field& f, Scope scope);
/// d = +-1, c != 0: T(b,c,d) ~ T(b',c',0) (explicit S for d = 1) and the
/// same statement for Tt.
Result lemma_dint(const Field& f, Scope scope);

// Property suites.  random == 0 means exhaustive.

Result field_axioms(const Field& f, int random, std::uint64_t seed);
Result frobenius(const Field& f, int random, std::uint64_t seed);
/// Exhaustive: every 2x2 matrix and the generators of every listed module.
/// Random: square matrices of size 1..9.
Result cayley_hamilton(const Field& f, int random, std::uint64_t seed);
/// X+ V_rho in V_{rho+2} and X- V_rho in V_{rho-2}.  Exhaustive: every
/// listed module and, over GF(3), every product pair.  Random: products of
/// random pairs.
Result weight_shift(const Field& f, int random, std::uint64_t seed);
/// Engine and oracle descriptors have the dimension of the product, and the
/// engine's leaves are the composition factors.  Exhaustive: every pair over
/// f.  Random: pairs are drawn until `random` of them have an engine
/// descriptor within the extension cap.
Result dimension_conservation(const Field& f, int random, std::uint64_t seed);
/// The same on already computed sweep records.
Result dimension_conservation(const std::vector<PairRecord>& records);

}  // namespace sl2c3::checks
