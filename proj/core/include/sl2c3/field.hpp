#pragma once

// Exact arithmetic in GF(3^k), 1 <= k <= 6.
//
// Elements are stored as a base-3 code c0 + 3*c1 + 9*c2 + ... of their
// coefficient vector in the polynomial basis 1, t, t^2, ... where t is a root
// of the field modulus.  All arithmetic goes through precomputed tables
// (q <= 729), so a Field is fairly heavy but element operations are a single
// lookup.  Fields are interned: make_field() returns a reference that stays
// valid for the lifetime of the process, which lets elements carry a plain
// pointer to their field.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2c3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs roots that only exist in an extension.
class FieldTooSmall : public Error {
 public:
  FieldTooSmall(int required_degree, const std::string& what)
      : Error(what), required_degree_(required_degree) {}
  /// Degree over GF(3) of the smallest field known to suffice.
  int required_degree() const { return required_degree_; }

 private:
  int required_degree_;
};

using Code = std::uint16_t;

class Field;

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const Field* f, Code v) : f_(f), v_(v) {}

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  Code code() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const { return f_ == o.f_ && v_ == o.v_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Multiplicative inverse; throws Error on zero.
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const;
  /// Coefficients c0..c_{k-1} over GF(3).
  std::vector<int> coeffs() const;
  /// Literal form shared with the CLI: "2" over GF(3), "[c0,c1,...]" otherwise.
  std::string str() const;

 private:
  const Field* f_ = nullptr;
  Code v_ = 0;
};

/// Lexicographic order on coefficient sequences (c0 compared first).  This is
/// the tie-breaking order used for every canonical choice in the library.
bool encoding_less(const FieldElem& a, const FieldElem& b);

class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int degree() const { return k_; }
  int order() const { return q_; }
  /// Monic modulus, low coefficient first, length degree()+1.
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  /// Image of an integer in the prime subfield.
  FieldElem from_int(long long n) const;
  FieldElem from_coeffs(const std::vector<int>& c) const;
  FieldElem from_code(Code c) const { return {this, c}; }
  /// The generator t (a root of the modulus); equals 0 when k == 1.
  FieldElem gen() const;
  /// All q elements in code order.
  std::vector<FieldElem> elements() const;

  // Raw table access for inner loops.
  Code add(Code a, Code b) const { return add_[a * q_ + b]; }
  Code mul(Code a, Code b) const { return mul_[a * q_ + b]; }
  Code neg(Code a) const { return neg_[a]; }
  Code sub(Code a, Code b) const { return add_[a * q_ + neg_[b]]; }
  Code inv_code(Code a) const;
  int lex_key(Code a) const { return key_[a]; }

  /// Square root with the lexicographically smaller encoding, if one exists.
  std::optional<FieldElem> sqrt(const FieldElem& a) const;
  /// Unique cube root (inverse Frobenius).
  FieldElem cbrt(const FieldElem& a) const;

  bool is_prime_field() const { return k_ == 1; }
  std::string name() const;

 private:
  friend const Field& make_field(int, std::optional<std::vector<int>>);
  Field(int k, std::vector<int> modulus);

  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Code> add_, mul_, neg_, inv_, cbrt_;
  std::vector<int> sqrt_;  // -1 when not a square
  std::vector<int> key_;
};

/// Interned field context.  With no modulus the built-in default for k is
/// used: x, x^2+1, x^3+2x+1, x^4+x+2, x^5+2x+1, x^6+x+2.
/// Throws Error on k outside [1,6] or a malformed/reducible modulus.
const Field& make_field(int k, std::optional<std::vector<int>> modulus = std::nullopt);
inline const Field& gf(int k) { return make_field(k); }

/// Built-in default modulus for degree k.
std::vector<int> default_modulus(int k);

/// True iff the monic polynomial (low coefficient first) over GF(3) is
/// irreducible; decided by trial division by all monic polynomials of degree
/// at most deg/2.
bool is_irreducible_gf3(const std::vector<int>& poly);

/// Image of a under the fixed embedding of its field into target.  The
/// embedding sends the source generator to the smallest-encoding root of the
/// source modulus in target; it is computed once per pair and cached.
/// Throws Error when target.degree() is not a multiple of the source degree.
FieldElem lift(const FieldElem& a, const Field& target);

/// Root of a polynomial with its multiplicity.
struct RootMult {
  FieldElem root;
  int mult;
};

struct PolyRoots {
  std::vector<RootMult> roots;  // sorted by encoding
  int cofactor_degree = 0;      // degree left after removing all roots
};

/// Roots in the coefficients' own field, by exhaustive evaluation.
/// Coefficients low-first; the leading one must be nonzero.  Intended for the
/// cubics that arise here but works for any degree.
PolyRoots poly_roots(const std::vector<FieldElem>& coeffs);

/// Largest field degree that automatic extension may reach: the value of
/// SL2_MAX_EXT_DEGREE when set (clamped to [1,6]), else 6.
int max_extension_degree();

/// Parses the shared literal grammar ("2", "[0,1]") into an element of f.
FieldElem parse_elem(const Field& f, const std::string& text);

}  // namespace sl2c3
