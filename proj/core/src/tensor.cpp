#include "sl2c3/tensor.hpp"

#include <algorithm>
#include <map>

namespace sl2c3 {

Rep tensor(const Rep& a, const Rep& b) {
  if (&a.field() != &b.field()) throw Error("tensor of modules over different fields");
  const Field& f = a.field();
  const Mat ia = Mat::identity(f, a.dim());
  const Mat ib = Mat::identity(f, b.dim());
  Rep r;
  r.xminus = kron(a.xminus, ib) + kron(ia, b.xminus);
  r.h = kron(a.h, ib) + kron(ia, b.h);
  r.xplus = kron(a.xplus, ib) + kron(ia, b.xplus);
  return r;
}

namespace {

bool is_diagonal(const Mat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (i != j && m.code(i, j) != 0) return false;
  return true;
}

}  // namespace

WeightDecomp weight_spaces(const Rep& r) {
  const Field& f = r.field();
  const int n = r.dim();
  WeightDecomp out;
  if (is_diagonal(r.h)) {
    std::map<int, std::vector<Vec>> groups;  // keyed by lex key of the weight
    std::map<int, Code> code_of;
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      const Code w = r.h.code(i, i);
      groups[f.lex_key(w)].push_back(e);
      code_of[f.lex_key(w)] = w;
    }
    for (auto& [key, vs] : groups) out.push_back({f.from_code(code_of[key]), Subspace::span(f, n, vs)});
    return out;
  }
  const Poly cp = charpoly(r.h);
  const PolyRoots roots = poly_roots(cp);
  if (roots.cofactor_degree > 0) {
    const int need = splitting_degree(cp, max_extension_degree());
    throw FieldTooSmall(need, "weights of H lie outside " + f.name());
  }
  int total = 0;
  for (const auto& e : eigenspaces(r.h)) {
    total += e.space.dim();
    out.push_back({e.value, e.space});
  }
  if (total != n) throw Error("H is not diagonalizable");
  return out;
}

HwLw hw_lw_vectors(const Rep& r) {
  HwLw out;
  const Subspace kp = kernel(r.xplus);
  const Subspace km = kernel(r.xminus);
  for (const auto& ws : weight_spaces(r)) {
    const Subspace hi = ws.space.intersect(kp);
    const Subspace lo = ws.space.intersect(km);
    if (hi.dim() > 0) out.highest.push_back({ws.weight, hi});
    if (lo.dim() > 0) out.lowest.push_back({ws.weight, lo});
  }
  return out;
}

CubeScalars cube_scalars(const Rep& r) {
  return {r.xplus.pow(3).scalar_value(), r.xminus.pow(3).scalar_value()};
}

std::pair<FieldElem, FieldElem> params_cube_scalars(const ModuleParams& p, const Field& f) {
  switch (p.kind()) {
    case ModuleParams::Kind::One:
    case ModuleParams::Kind::Two:
      return {f.zero(), f.zero()};
    case ModuleParams::Kind::T: {
      const ModuleParams q = p.lifted(f);
      return {q.b() * q.a1() * q.a2(), q.c()};
    }
    case ModuleParams::Kind::Tt: {
      const ModuleParams q = p.lifted(f);
      return {q.c(), q.b() * q.a1() * q.a2()};
    }
    case ModuleParams::Kind::Dual: {
      const auto [plus, minus] = params_cube_scalars(p.inner(), f);
      return {-plus, -minus};
    }
  }
  throw Error("unknown module kind");
}

Mat restrict_to_weight(const Rep& r, const Mat& op, const FieldElem& rho) {
  for (const auto& ws : weight_spaces(r))
    if (ws.weight == rho) return restrict_to(op, ws.space);
  throw Error(rho.str() + " is not a weight");
}

Mat xpxm_on_weight(const Rep& r, const FieldElem& rho) {
  return restrict_to_weight(r, r.xplus * r.xminus, rho);
}

}  // namespace sl2c3
