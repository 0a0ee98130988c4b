#pragma once

// Normal forms for the irreducible modules of dimension <= 3.
//
// Every such module is 1, 2, some T(b,c,d) or some Tt(b,1/b,0).  For c != 0
// the three cyclic rotations of the basis give
//   T(b,c,d) ~ T(a1/c, c, d+1) ~ T(a2/c, c, d-1),
// and the canonical representative is the rotation whose d has the smallest
// encoding (so d = 0 whenever d lies in GF(3)).

#include <optional>
#include <string>
#include <tuple>

#include "sl2c3/field.hpp"
#include "sl2c3/linalg.hpp"
#include "sl2c3/sl2.hpp"

namespace sl2c3 {

class CanonicalClass {
 public:
  /// Declaration order is the sort order.
  enum class Kind { One, Two, Tt, T };

  static CanonicalClass one();
  static CanonicalClass two();
  /// Tt(b, 1/b, 0); b must be nonzero.
  static CanonicalClass tt(const FieldElem& b);
  /// Stores (b,c,d) as given; use canonical_T() to normalize first.
  static CanonicalClass t(const FieldElem& b, const FieldElem& c, const FieldElem& d);

  Kind kind() const { return kind_; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }
  int dim() const;
  const Field* field() const { return kind_ == Kind::T || kind_ == Kind::Tt ? b_.field_ptr() : nullptr; }

  ModuleParams to_params() const;
  CanonicalClass lifted(const Field& target) const;
  /// "One", "Two", "Tt(b)", "T(b,c,d)".
  std::string str() const;

  bool operator==(const CanonicalClass& o) const;
  bool operator!=(const CanonicalClass& o) const { return !(*this == o); }
  bool operator<(const CanonicalClass& o) const;

 private:
  Kind kind_ = Kind::One;
  FieldElem b_, c_, d_;
};

using Triple = std::tuple<FieldElem, FieldElem, FieldElem>;

/// T(b,c,d) -> T(-b,-c,-d) and Tt likewise; One and Two are self-dual and
/// Dual(Dual(p)) -> p.  The result never has Kind::Dual at the top.
ModuleParams dual_params(const ModuleParams& p);

/// T-parameters isomorphic to Tt(b,c,d) when at most one of a1, a2, b is
/// zero: (c/(a1a2), a1a2 b, d), (1/(b a2), 0, d+1) or (1/(b a1), 0, d-1).
std::optional<Triple> ttilde_to_T(const FieldElem& b, const FieldElem& c, const FieldElem& d);

/// For Tt(b,c,d) with two of a1, a2, b zero: the b0 with
/// Tt(b,c,d) ~ Tt(b0, 1/b0, 0).  Throws Error when that is not the case or
/// the parameters are excluded.
FieldElem normalize_twozeros(const FieldElem& b, const FieldElem& c, const FieldElem& d);

/// T(b,c,d) ~ T(b',c',0) for d = +-1 and c != 0.
std::pair<FieldElem, FieldElem> shift_d(const FieldElem& b, const FieldElem& c, const FieldElem& d);

/// Rotation normal form of T(b,c,d) described above.
CanonicalClass canonical_T(const FieldElem& b, const FieldElem& c, const FieldElem& d);

/// Canonical class of a named module, computed from its parameters alone.
/// Parameters whose module is reducible (T(b,0,+-1) and the Tt equivalents)
/// still get a class; it is whatever the formulas produce.
CanonicalClass canonicalize(const ModuleParams& p);

/// Reads the canonical class off the matrices of an irreducible module of
/// dimension 1, 2 or 3.  Throws Error for anything else.
CanonicalClass recover_params(const Rep& r);

/// Canonical path for irreducible modules of dimension <= 3, intertwiner
/// search otherwise.
bool is_isomorphic(const Rep& a, const Rep& b);
bool is_isomorphic_by_intertwiner(const Rep& a, const Rep& b);

}  // namespace sl2c3
