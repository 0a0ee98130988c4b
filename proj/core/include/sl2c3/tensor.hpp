#pragma once

// Tensor products and weight-space machinery.

#include <optional>
#include <utility>
#include <vector>

#include "sl2c3/linalg.hpp"
#include "sl2c3/sl2.hpp"

namespace sl2c3 {

struct WeightSpace {
  FieldElem weight;
  Subspace space;
};
/// Weight spaces sorted by weight encoding.
using WeightDecomp = std::vector<WeightSpace>;

/// G acts as G (x) I + I (x) G; basis e_i (x) f_j with the left index outer.
Rep tensor(const Rep& a, const Rep& b);

/// Eigenspace decomposition of H.  Throws FieldTooSmall when H has
/// eigenvalues outside the field and Error when it is not diagonalizable.
WeightDecomp weight_spaces(const Rep& r);

struct HwLw {
  WeightDecomp highest;  // ker X+ within each weight space (nonzero ones only)
  WeightDecomp lowest;   // ker X- within each weight space
};
HwLw hw_lw_vectors(const Rep& r);

struct CubeScalars {
  std::optional<FieldElem> plus;   // X+^3 when it is a scalar matrix
  std::optional<FieldElem> minus;  // X-^3 when it is a scalar matrix
};
CubeScalars cube_scalars(const Rep& r);

/// X+^3 and X-^3 scalars of a named module computed from its parameters:
/// (b a1 a2, c) for T, (c, b a1 a2) for Tt, (0, 0) for One and Two, and the
/// negatives for a dual.  Parameters are lifted into f.
std::pair<FieldElem, FieldElem> params_cube_scalars(const ModuleParams& p, const Field& f);

/// X+X- restricted to the weight space of weight rho, in that space's
/// echelon basis.  Throws Error if rho is not a weight.
Mat xpxm_on_weight(const Rep& r, const FieldElem& rho);
/// The same for an arbitrary operator preserving weight spaces.
Mat restrict_to_weight(const Rep& r, const Mat& op, const FieldElem& rho);

}  // namespace sl2c3
