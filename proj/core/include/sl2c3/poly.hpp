#pragma once

// Dense univariate polynomials over a Field, low coefficient first.

#include <string>
#include <vector>

#include "sl2c3/field.hpp"

namespace sl2c3 {

using Poly = std::vector<FieldElem>;

/// Drops trailing zero coefficients (the zero polynomial becomes empty).
Poly poly_trim(Poly p);
int poly_degree(const Poly& p);  // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
/// Quotient and remainder; throws on division by zero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& p);
FieldElem poly_eval(const Poly& p, const FieldElem& x);
/// (x - r)^m
Poly poly_linear_power(const FieldElem& r, int m);
/// Image of every coefficient in target (see lift()).
Poly poly_lift(const Poly& p, const Field& target);

/// Smallest degree (a multiple of the coefficient field's degree, at most
/// max_degree) over which p splits into linear factors; 0 if none does.
int splitting_degree(const Poly& p, int max_degree);

/// "x^3 + 2x + [0,1]" style rendering, highest degree first.
std::string poly_str(const Poly& p);

}  // namespace sl2c3
