#pragma once

// sl(2)-modules given by explicit matrices, and the named families
// 1, 2, 3, T(b,c,d), Tt(b,c,d) together with their duals.
//
// Basis conventions: for T and Tt the basis is e1, e2, e3 with
// H = diag(d-1, d, d+1).  For 2 it is q1 (weight 1), q2 (weight -1).

#include <memory>
#include <optional>
#include <string>

#include "sl2c3/field.hpp"
#include "sl2c3/linalg.hpp"

namespace sl2c3 {

/// Symbolic name of a module from the families above.
class ModuleParams {
 public:
  enum class Kind { One, Two, T, Tt, Dual };

  static ModuleParams one();
  static ModuleParams two();
  static ModuleParams T(FieldElem b, FieldElem c, FieldElem d);
  static ModuleParams Tt(FieldElem b, FieldElem c, FieldElem d);
  static ModuleParams dual(const ModuleParams& inner);

  Kind kind() const { return kind_; }
  bool is_family() const { return kind_ == Kind::T || kind_ == Kind::Tt; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }
  FieldElem a1() const;  // bc + d - 1
  FieldElem a2() const;  // bc - d - 1
  const ModuleParams& inner() const;

  /// Field of the parameters; nullptr for One, Two and their duals.
  const Field* field() const;
  int dim() const;
  ModuleParams lifted(const Field& target) const;

  /// Text form accepted by parse_module_params().
  std::string str() const;

  bool operator==(const ModuleParams& o) const;
  bool operator!=(const ModuleParams& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::One;
  FieldElem b_, c_, d_;
  std::shared_ptr<const ModuleParams> inner_;
};

/// (b,c,d) = (0,0,1) and (0,0,-1) are excluded for both families.
bool is_admissible(const FieldElem& b, const FieldElem& c, const FieldElem& d);
/// Throws Error when a T/Tt (possibly under Dual) has excluded parameters.
void check_admissible(const ModuleParams& p);

/// Parses `One | Two | T(e,e,e) | Tt(e,e,e) | Dual(expr)` with element
/// literals over f, and checks admissibility.  Errors carry the offending
/// character position.
ModuleParams parse_module_params(const Field& f, const std::string& text);

struct Rep {
  Mat xminus, h, xplus;
  std::optional<ModuleParams> params;

  int dim() const { return h.rows(); }
  const Field& field() const { return h.field(); }
  Rep lifted(const Field& target) const;
};

/// N = 1, 2 or 3; 3 coincides with T(0,0,0).
Rep make_standard(int n, const Field& f);
Rep make_T(const FieldElem& b, const FieldElem& c, const FieldElem& d);
Rep make_Ttilde(const FieldElem& b, const FieldElem& c, const FieldElem& d);
/// Same matrices without the exclusion check, for reducible edge cases.
Rep make_T_unchecked(const FieldElem& b, const FieldElem& c, const FieldElem& d);
Rep make_Ttilde_unchecked(const FieldElem& b, const FieldElem& c, const FieldElem& d);
/// Builds the module named by p over f (parameters are lifted into f).
Rep build(const ModuleParams& p, const Field& f);

/// Generators replaced by their negative transposes.
Rep dual(const Rep& r);

/// First violated bracket relation ("[X+,X-]-H at (i,j)"), or nullopt.
std::optional<std::string> validate(const Rep& r);

/// Absolute irreducibility: no proper nonzero submodule over the algebraic
/// closure.  In dimension <= 3 over fields of order <= 27 every projective
/// point is spun; otherwise the minimal-submodule generators are used,
/// extending the field as far as the max_degree cap allows.
bool is_irreducible(const Rep& r);

}  // namespace sl2c3
