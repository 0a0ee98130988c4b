#pragma once

// Closed-form predictions for tensor products of the irreducible modules of
// dimension <= 3, read off the classification tables.  Nothing here builds a
// matrix: the case conditions are evaluated on the parameters and the row's
// decomposition is instantiated.
//
// Tables: "thm" (1 (x) V, 2 (x) 2, 2 (x) Tt), "2" (2 (x) T), "3" (Tt (x) Tt),
// "4" (Tt (x) T), "5a" (T (x) T with gamma = -c), "5b" (T (x) T otherwise).
//
// The default reading corrects the known misprints.  With literal = true the
// printed text is used instead:
//   - table 2, row c!=0; d=0; b=1/c prints T(0,c,1) (+) T(0,c,1);
//   - table 4 writes c (undefined there, taken as 1/b) for gamma in the rho
//     rows and the last semidirect row, and rho_i for rho_i/gamma;
//   - table 4, row gamma!=0; delta=0; b beta (1-beta gamma)^2=-1 has a tensor
//     product inside the decomposition where a direct sum is meant;
//   - the caption of 5b reads gamma != c, which leaves gamma = c != -c
//     without a row;
//   - the X+^3 scalar on T (x) T is printed with b a1 a1.

#include <optional>
#include <string>
#include <vector>

#include "sl2c3/canon.hpp"
#include "sl2c3/descriptor.hpp"
#include "sl2c3/field.hpp"
#include "sl2c3/sl2.hpp"

namespace sl2c3 {

struct CaseId {
  std::string table;  // "thm", "2", "3", "4", "5a", "5b"
  std::string row;    // satisfied conditions, e.g. "c≠0; d=0; b=1/c"

  std::string str() const { return table + ": " + row; }
  bool operator==(const CaseId& o) const { return table == o.table && row == o.row; }
  bool operator!=(const CaseId& o) const { return !(*this == o); }
  bool operator<(const CaseId& o) const { return table != o.table ? table < o.table : row < o.row; }
};

struct TableRow {
  CaseId id;
  std::string decomposition;  // as read by default
  std::string literal;        // the printed text when it differs, else empty
};

/// Every row of every table in a fixed order, including the row that only
/// the literal caption of 5b produces.
const std::vector<TableRow>& table_rows();

/// True for the rows whose literal reading differs from the default one.
bool is_misprint_row(const CaseId& id);

/// Table symbols for a pair.  For a Tt(b,1/b,0) factor the triple (b,1/b,0)
/// is used.  Fields that do not apply to the pair (One, Two) stay empty.
struct SymbolSet {
  std::optional<FieldElem> a1, a2, alpha1, alpha2, J, K, D, Delta;
  std::vector<RootMult> rho, mu;  // roots in the pair's field; may be partial
};
SymbolSet symbols(const ModuleParams& left, const ModuleParams& right, const Field& f);

/// Row of a pair over f (parameters are lifted into f).
CaseId classify(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal = false);

struct Prediction {
  CaseId id;
  std::optional<Descriptor> descriptor;  // empty when the row does not exist
  std::string error;                     // why descriptor is empty
  int field_degree = 1;
};

/// Prediction over f, extended as far as max_extension_degree() when a row
/// needs square roots or cubic roots outside f.
Prediction predict(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal = false);

/// X+^3 and X-^3 scalars of the product by the closed forms:
///   Tt (x) Tt: ((b+beta)/(b beta), 0)
///   Tt (x) T:  (1/b + beta alpha1 alpha2, gamma)
///   T (x) T:   (b a1 a2 + beta alpha1 alpha2, c + gamma)
/// while a factor 1 or 2 contributes nothing.  Factors are brought into T/Tt
/// form first; the order of the two factors does not matter.
std::pair<FieldElem, FieldElem> product_cube_scalars(const ModuleParams& left, const ModuleParams& right,
                                                     const Field& f, bool literal = false);

}  // namespace sl2c3
