#pragma once

// Exact dense linear algebra over GF(3^k).
//
// Vectors are plain code sequences (Vec) interpreted over whatever field the
// surrounding Mat or Subspace carries.  Matrices act on column vectors.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sl2c3/field.hpp"
#include "sl2c3/poly.hpp"

namespace sl2c3 {

using Vec = std::vector<Code>;

class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, int rows, int cols);

  static Mat identity(const Field& f, int n);
  static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);
  static Mat from_elems(const Field& f, const std::vector<std::vector<FieldElem>>& rows);
  /// Matrix whose columns are the given vectors.
  static Mat from_columns(const Field& f, int rows, const std::vector<Vec>& cols);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  bool empty() const { return f_ == nullptr; }

  FieldElem at(int i, int j) const { return {f_, d_[i * c_ + j]}; }
  Code code(int i, int j) const { return d_[i * c_ + j]; }
  void set(int i, int j, const FieldElem& v) { d_[i * c_ + j] = v.code(); }
  void set_code(int i, int j, Code v) { d_[i * c_ + j] = v; }
  Vec column(int j) const;
  Vec row(int i) const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled(const FieldElem& s) const;
  Mat transpose() const;
  Vec apply(const Vec& v) const;
  Mat pow(int e) const;
  /// Image of every entry in target (see lift()).
  Mat lifted(const Field& target) const;

  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_zero() const;
  /// The scalar s when the matrix equals s*I.
  std::optional<FieldElem> scalar_value() const;

  std::string str() const;

 private:
  const Field* f_ = nullptr;
  int r_ = 0, c_ = 0;
  std::vector<Code> d_;
};

/// Kronecker product a (x) b, with a's index outermost.
Mat kron(const Mat& a, const Mat& b);

/// Row-reduces m in place to reduced echelon form; returns pivot columns.
std::vector<int> rref(Mat& m);
int rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
FieldElem determinant(const Mat& m);

/// A subspace of k^n kept as a reduced echelon basis, so two equal
/// subspaces have identical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const Field& f, int n);  // zero subspace
  static Subspace span(const Field& f, int n, const std::vector<Vec>& vs);
  static Subspace full(const Field& f, int n);

  const Field& field() const { return *f_; }
  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  /// Coordinates of v in basis(); throws if v is not in the subspace.
  std::vector<Code> coords(const Vec& v) const;
  /// v minus its component along the subspace; the pivot entries become zero.
  Vec reduce(const Vec& v) const;

  Subspace plus(const Subspace& o) const;
  Subspace plus(const Vec& v) const;
  Subspace intersect(const Subspace& o) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  const Field* f_ = nullptr;
  int n_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> pivots_;
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m);
/// Common kernel of several matrices with the same column count.
Subspace joint_kernel(const std::vector<Mat>& ms);

/// Characteristic and minimal polynomial, both monic.
struct CharMinPoly {
  Poly charpoly;
  Poly minpoly;
};
CharMinPoly char_min_poly(const Mat& m);
Poly charpoly(const Mat& m);
Poly minpoly(const Mat& m);
/// p(m) by Horner's rule.
Mat poly_eval_mat(const Poly& p, const Mat& m);

struct Eigenspace {
  FieldElem value;
  Subspace space;
};
/// Eigenspaces for the eigenvalues lying in m's own field, sorted by
/// encoding.  Eigenvalues outside the field are silently absent; use
/// charpoly() to detect them.
std::vector<Eigenspace> eigenspaces(const Mat& m);
/// Generalized eigenspaces ker (m - l)^n.
std::vector<Eigenspace> generalized_eigenspaces(const Mat& m);

/// Matrix of m restricted to an invariant subspace, in the subspace's
/// echelon basis.  Throws Error if u is not invariant.
Mat restrict_to(const Mat& m, const Subspace& u);
/// Matrix of the induced action on k^n / u in the basis of standard vectors
/// at the non-pivot positions of u.  Requires u invariant.
Mat quotient_action(const Mat& m, const Subspace& u);
/// Non-pivot positions of u: the standard quotient basis used above.
std::vector<int> quotient_positions(const Subspace& u);

/// Basis of { P : P a_i = b_i P for all i }, with a_i n x n and b_i m x m
/// (P is m x n).
std::vector<Mat> intertwiner_space(const std::vector<Mat>& a, const std::vector<Mat>& b);

/// Some invertible P with P a_i P^-1 = b_i, if one exists.  The search is
/// exhaustive over projective points of the intertwiner space when that set
/// is small and randomized (seeded, deterministic) otherwise; in the
/// randomized regime a failure to find one throws Error rather than
/// reporting non-existence.  Equal families give the identity.
std::optional<Mat> solve_intertwiner(const std::vector<Mat>& a, const std::vector<Mat>& b);

}  // namespace sl2c3
