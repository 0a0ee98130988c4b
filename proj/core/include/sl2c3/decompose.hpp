#pragma once

// Structural decomposition of sl(2)-modules: spinning, socles, Krull-Schmidt
// splitting through the endomorphism algebra, socle layers, and the
// resulting descriptor trees.

#include <optional>
#include <string>
#include <vector>

#include "sl2c3/canon.hpp"
#include "sl2c3/descriptor.hpp"
#include "sl2c3/linalg.hpp"
#include "sl2c3/sl2.hpp"

namespace sl2c3 {

/// Smallest submodule containing v (resp. the subspace s).  Throws on v = 0.
Subspace spin(const Rep& r, const Vec& v);
Subspace spin(const Rep& r, const Subspace& s);

/// Subspaces G_1, ..., G_m such that every nonzero vector of any G_i spins to
/// an irreducible submodule and every irreducible submodule meets some G_i.
/// Per weight rho they are the joint eigenspaces of (X+X-, X-^3) with nonzero
/// X-^3 eigenvalue, those of (X+X-, X-^3, X+^3) with eigenvalues (., 0, nonzero),
/// and ker X+ cut down by X-^m with m the dimension of the irreducible of
/// highest weight rho.  Throws FieldTooSmall when one of these operators has
/// eigenvalues outside the field.
std::vector<Subspace> simple_generator_spaces(const Rep& r);

/// Sum of all irreducible submodules.
Subspace socle(const Rep& r);

/// The module structure on a submodule (in its echelon basis) and on the
/// quotient (in the basis of quotient_positions()).
Rep sub_rep(const Rep& r, const Subspace& s);
Rep quotient_rep(const Rep& r, const Subspace& s);

/// Direct sum decomposition into indecomposable submodules, found by
/// splitting with endomorphisms that have several eigenvalues.  Returned
/// subspaces are ordered by their echelon bases.
std::vector<Subspace> indecomposable_summands(const Rep& r);

/// The irreducible summands of a semisimple module, identified.
std::vector<CanonicalClass> semisimple_constituents(const Rep& r);

/// Socle layers soc(V), soc(V/soc V), ... each as its sorted list of
/// irreducible constituents; element 0 is the socle.
std::vector<std::vector<CanonicalClass>> socle_layers(const Rep& r);

/// Multiset of composition factors, sorted.
std::vector<CanonicalClass> composition_factors(const Rep& r);

/// Decomposition of r over its own field.  Throws FieldTooSmall when an
/// extension is needed.
Descriptor decompose(const Rep& r);

struct Decomposition {
  Descriptor descriptor;
  int field_degree;  // degree of the field the descriptor lives in
};
/// decompose() with automatic lifting to the required extension, up to
/// max_extension_degree().
Decomposition decompose_lifting(const Rep& r);

}  // namespace sl2c3
