#include "sl2c3/poly.hpp"

#include <sstream>

namespace sl2c3 {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) {
  const Poly t = poly_trim(p);
  return static_cast<int>(t.size()) - 1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  if (a.empty()) return poly_trim(b);
  if (b.empty()) return poly_trim(a);
  const Field& f = a.front().field();
  Poly r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly nb = b;
  for (auto& c : nb) c = -c;
  return poly_add(a, nb);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const Field& f = a.front().field();
  Poly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return poly_trim(r);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  Poly d = poly_trim(b);
  if (d.empty()) throw Error("polynomial division by zero");
  Poly r = poly_trim(a);
  const Field& f = d.back().field();
  if (r.size() < d.size()) return {{}, r};
  Poly q(r.size() - d.size() + 1, f.zero());
  const FieldElem lead_inv = d.back().inv();
  while (!r.empty() && r.size() >= d.size()) {
    const std::size_t shift = r.size() - d.size();
    const FieldElem c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

Poly poly_monic(const Poly& p) {
  Poly t = poly_trim(p);
  if (t.empty()) return t;
  const FieldElem inv = t.back().inv();
  for (auto& c : t) c *= inv;
  return t;
}

FieldElem poly_eval(const Poly& p, const FieldElem& x) {
  FieldElem acc = x.field().zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_linear_power(const FieldElem& r, int m) {
  const Field& f = r.field();
  Poly out{f.one()};
  for (int i = 0; i < m; ++i) out = poly_mul(out, Poly{-r, f.one()});
  return out;
}

Poly poly_lift(const Poly& p, const Field& target) {
  Poly out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(lift(c, target));
  return out;
}

int splitting_degree(const Poly& p, int max_degree) {
  const Poly t = poly_trim(p);
  if (t.empty()) throw Error("splitting_degree of the zero polynomial");
  const int k = t.back().field().degree();
  for (int K = k; K <= max_degree; K += k) {
    const Field& target = make_field(K);
    const PolyRoots r = poly_roots(poly_lift(t, target));
    if (r.cofactor_degree == 0) return K;
  }
  return 0;
}

std::string poly_str(const Poly& p) {
  const Poly t = poly_trim(p);
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
    if (t[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const bool unit = t[i] == t[i].field().one();
    if (i == 0 || !unit) os << t[i].str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

}  // namespace sl2c3
