#include "sl2c3/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "sl2c3/poly.hpp"
#include "sl2c3/tensor.hpp"

namespace sl2c3 {

namespace {

// A factor in the form the tables use: 1, 2, Tt(b,1/b,0) or T(b,c,d) with
// c != 0 only in rotation normal form.
struct Factor {
  enum class Kind { One, Two, Tt, T };
  Kind kind = Kind::One;
  FieldElem b, c, d;
};

int rank(Factor::Kind k) { return static_cast<int>(k); }

bool in_prime(const FieldElem& x) { return x.code() < 3; }

Factor make_factor(const ModuleParams& p, const Field& f) {
  const ModuleParams q = p.kind() == ModuleParams::Kind::Dual ? dual_params(p.inner()) : p;
  check_admissible(q);
  Factor out;
  switch (q.kind()) {
    case ModuleParams::Kind::One:
      return out;
    case ModuleParams::Kind::Two:
      out.kind = Factor::Kind::Two;
      return out;
    default:
      break;
  }
  const ModuleParams l = q.lifted(f);
  FieldElem b = l.b(), c = l.c(), d = l.d();
  if (q.kind() == ModuleParams::Kind::Tt) {
    if (auto t = ttilde_to_T(b, c, d)) {
      std::tie(b, c, d) = *t;
    } else {
      out.kind = Factor::Kind::Tt;
      out.b = normalize_twozeros(b, c, d);
      out.c = out.b.inv();
      out.d = f.zero();
      return out;
    }
  }
  out.kind = Factor::Kind::T;
  if (c.is_zero()) {
    out.b = b;
    out.c = c;
    out.d = d;
  } else {
    const CanonicalClass k = canonical_T(b, c, d);
    out.b = k.b();
    out.c = k.c();
    out.d = k.d();
  }
  return out;
}

// T(b,c,d) ~ T(a2/c, c, d-1) ~ T(a1/c, c, d+1) for c != 0.
Factor rotate(const Factor& t, int step) {
  const FieldElem one = t.b.field().one();
  const FieldElem a1 = t.b * t.c + t.d - one, a2 = t.b * t.c - t.d - one;
  Factor r = t;
  if (step > 0) {
    r.b = a1 / t.c;
    r.d = t.d + one;
  } else {
    r.b = a2 / t.c;
    r.d = t.d - one;
  }
  return r;
}

// Puts the pair in table order and, for T (x) T, rotates a factor so that
// d + delta avoids 1 and 2 whenever some c is nonzero.
std::pair<Factor, Factor> order_pair(Factor l, Factor r) {
  if (rank(r.kind) < rank(l.kind)) std::swap(l, r);
  if (l.kind == Factor::Kind::T && r.kind == Factor::Kind::T) {
    const FieldElem s = l.d + r.d;
    if (in_prime(s) && !s.is_zero()) {
      const int step = s.code() == 1 ? -1 : 1;
      if (!l.c.is_zero())
        l = rotate(l, step);
      else if (!r.c.is_zero())
        r = rotate(r, step);
    }
  }
  return {l, r};
}

// ---- descriptor builders -------------------------------------------------

Descriptor leaf(const CanonicalClass& c) { return Descriptor::leaf(c); }
Descriptor one() { return leaf(CanonicalClass::one()); }
Descriptor two() { return leaf(CanonicalClass::two()); }

// Two nodes, top over bottom, joined by the given actions.
Descriptor glue2(const CanonicalClass& top, const CanonicalClass& bottom, bool minus, bool plus) {
  std::vector<GlueEdge> e;
  if (minus) e.push_back({0, 1, Action::XMinus});
  if (plus) e.push_back({0, 1, Action::XPlus});
  return Descriptor::glue({top, bottom}, std::move(e));
}

const CanonicalClass k1 = CanonicalClass::one();
const CanonicalClass k2 = CanonicalClass::two();

// "A -> B" is an X- edge from A down to B, "A <- B" an X+ edge from B down
// to A, "A c+ B" both.
Descriptor arrow_minus(const CanonicalClass& a, const CanonicalClass& b) { return glue2(a, b, true, false); }
Descriptor arrow_plus(const CanonicalClass& a, const CanonicalClass& b) { return glue2(b, a, false, true); }
Descriptor double_edge(const CanonicalClass& a, const CanonicalClass& b) { return glue2(a, b, true, true); }

Descriptor T(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const FieldElem one_e = b.field().one();
  if (c.is_zero() && d == one_e) return glue2(k1, k2, true, !b.is_zero());
  if (c.is_zero() && d == -one_e) return glue2(k2, k1, true, !b.is_zero());
  return leaf(canonical_T(b, c, d));
}
Descriptor Tt(const FieldElem& b) { return leaf(CanonicalClass::tt(b)); }
Descriptor three(const Field& f) { return T(f.zero(), f.zero(), f.zero()); }

Descriptor sum(std::vector<Descriptor> xs) { return Descriptor::sum(std::move(xs)); }
Descriptor twice(const Descriptor& x) { return Descriptor::semi(x, x); }

Descriptor of_factor(const Factor& x) {
  switch (x.kind) {
    case Factor::Kind::One:
      return one();
    case Factor::Kind::Two:
      return two();
    case Factor::Kind::Tt:
      return Tt(x.b);
    case Factor::Kind::T:
      return T(x.b, x.c, x.d);
  }
  throw Error("unknown factor");
}

FieldElem sqrt_or_extend(const FieldElem& x) {
  const Field& f = x.field();
  if (auto s = f.sqrt(x)) return *s;
  throw FieldTooSmall(2 * f.degree(), "square root of " + x.str() + " needs GF(3^" + std::to_string(2 * f.degree()) + ")");
}

// Roots (with multiplicity) of the monic cubic x^3 + e2 x^2 + e1 x + e0.
std::vector<FieldElem> cubic_roots(const FieldElem& e0, const FieldElem& e1, const FieldElem& e2) {
  const Field& f = e0.field();
  const Poly p = {e0, e1, e2, f.one()};
  const PolyRoots pr = poly_roots(p);
  if (pr.cofactor_degree > 0) {
    const int k = splitting_degree(p, max_extension_degree());
    if (k == 0) throw Error("cubic " + poly_str(p) + " does not split within the extension cap");
    throw FieldTooSmall(k, "cubic " + poly_str(p) + " splits over GF(3^" + std::to_string(k) + ")");
  }
  std::vector<FieldElem> out;
  for (const auto& rm : pr.roots)
    for (int i = 0; i < rm.mult; ++i) out.push_back(rm.root);
  return out;
}

// A row: its id and a builder run in the same field.
struct Row {
  CaseId id;
  std::function<Descriptor()> build;  // empty when the row does not exist
};

Row evaluate(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal);

Row thm_row(const Factor& l, const Factor& r, const Field& f) {
  if (l.kind == Factor::Kind::One) return {{"thm", "(1) 1⊗V"}, [r] { return of_factor(r); }};
  if (r.kind == Factor::Kind::Two) {
    return {{"thm", "(2) 2⊗2"}, [f = &f] { return sum({one(), three(*f)}); }};
  }
  // 2 (x) Tt(b,1/b,0)
  return {{"thm", "(3) 2⊗Tt(b,1/b,0)"}, [r] { return sum({Tt(r.b), T(r.c, r.b.field().zero(), r.b.field().zero())}); }};
}

Row table2(const Factor& t, bool literal) {
  const FieldElem b = t.b, c = t.c, d = t.d;
  const Field& f = b.field();
  const FieldElem z = f.zero(), o = f.one();
  const auto row = [](std::string s, std::function<Descriptor()> fn) { return Row{{"2", std::move(s)}, std::move(fn)}; };
  if (c.is_zero()) {
    if (d.is_zero()) {
      if (b.is_zero()) return row("c=0; d=0; b=0", [] { return m1_descriptor(); });
      return row("c=0; d=0; b≠0", [b] { return twice(Tt(b.inv())); });
    }
    if (d == o) {
      if (b.is_zero()) return row("c=0; d=1; b=0", [f = &f] { return sum({three(*f), arrow_minus(k2, k1)}); });
      return row("c=0; d=1; b≠0", [f = &f] { return sum({three(*f), double_edge(k2, k1)}); });
    }
    if (d == -o) {
      if (b.is_zero()) return row("c=0; d=2; b=0", [f = &f] { return sum({three(*f), arrow_minus(k1, k2)}); });
      return row("c=0; d=2; b≠0", [f = &f] { return sum({three(*f), double_edge(k1, k2)}); });
    }
    return row("c=0; d∉GF(3)", [=] { return sum({T(b * (d - o) / d, z, d - o), T(b * (d + o) / d, z, d + o)}); });
  }
  if (d.is_zero()) {
    if (b.is_zero()) return row("c≠0; d=0; b=0", [=] { return twice(T(z, c, o)); });
    if (b == c.inv()) {
      if (literal) return row("c≠0; d=0; b=1/c", [=] { return sum({T(z, c, o), T(z, c, o)}); });
      return row("c≠0; d=0; b=1/c", [=] { return sum({T(z, c, o), T((o + o) / c, c, o)}); });
    }
    return row("c≠0; d=0; b≠0,1/c", [=] {
      const FieldElem s = sqrt_or_extend(b / c);
      return sum({T(b + s, c, o), T(b - s, c, o)});
    });
  }
  if (in_prime(d)) throw Error("table 2 expects d = 0 or d outside GF(3) when c != 0");
  if (b.is_zero()) return row("c≠0; d∉GF(3); b=0", [=] { return sum({T(z, c, d + o), T(z, c, d - o)}); });
  if ((o - b * c + d).is_zero()) return row("c≠0; d∉GF(3); 1−bc+d=0", [=] { return sum({T(z, c, d), T(z, c, d + o)}); });
  if ((o - b * c - d).is_zero()) return row("c≠0; d∉GF(3); 1−bc−d=0", [=] { return sum({T(z, c, d - o), T(z, c, d)}); });
  const FieldElem disc = b * c + d * d;
  if (disc.is_zero())
    return row("c≠0; d∉GF(3); b≠0, 1−bc±d≠0; bc+d²=0", [=] { return twice(T(b + d / c, c, d + o)); });
  return row("c≠0; d∉GF(3); b≠0, 1−bc±d≠0; bc+d²≠0", [=] {
    const FieldElem s = sqrt_or_extend(disc);
    return sum({T(b + (d + s) / c, c, d + o), T(b + (d - s) / c, c, d + o)});
  });
}

Row table3(const Factor& x, const Factor& y) {
  const FieldElem b = x.b, beta = y.b;
  const Field& f = b.field();
  if (b == -beta)
    return {{"3", "b=−β"}, [f = &f] { return sum({three(*f), arrow_plus(k2, k1), arrow_plus(k1, k2)}); }};
  return {{"3", "b≠−β"}, [=] {
            const FieldElem s = (b + beta) / (b * beta);
            const FieldElem z = s.field().zero();
            return sum({T(s, z, z), Tt(s.inv()), Tt(s.inv())});
          }};
}

Row table4(const Factor& x, const Factor& y, bool literal, const Field& fr) {
  const FieldElem b = x.b, beta = y.b, gamma = y.c, delta = y.d;
  const Field& f = b.field();
  const FieldElem z = f.zero(), o = f.one();
  const auto row = [](std::string s, std::function<Descriptor()> fn) { return Row{{"4", std::move(s)}, std::move(fn)}; };
  const FieldElem al1 = beta * gamma + delta - o, al2 = beta * gamma - delta - o;
  const FieldElem J = o + al1 * al2 * b * beta;
  if (gamma.is_zero()) {
    if (delta.is_zero()) {
      if (beta == -b.inv()) return row("γ=0; δ=0; β=−1/b", [f = &f] { return sum({three(*f), m1_descriptor()}); });
      return row("γ=0; δ=0; β≠−1/b", [=] {
        const FieldElem s = (o + b * beta) / b;
        return sum({T(s, z, z), twice(Tt(s.inv()))});
      });
    }
    if (delta == o) return row("γ=0; δ=1", [=] { return sum({T(b.inv(), z, z), twice(Tt(b))}); });
    if (delta == -o) return row("γ=0; δ=2", [=] { return sum({T(b.inv(), z, z), twice(Tt(b))}); });
    if (b * beta * (o - delta * delta) == -o)
      return row("γ=0; δ∉GF(3); bβ(1−δ²)=−1", [=] { return sum({T(z, z, delta - o), T(z, z, delta), T(z, z, delta + o)}); });
    // X+^3 acts on the product as J/b, and on T(x,0,e) as x(1-e^2); the
    // printed T(J,0,e) is read as the module with that scalar.
    return row("γ=0; δ∉GF(3); bβ(1−δ²)≠−1", [=] {
      std::vector<Descriptor> xs;
      for (const FieldElem& e : {delta - o, delta, delta + o}) xs.push_back(T(literal ? J : J / (b * (o - e * e)), z, e));
      return sum(std::move(xs));
    });
  }
  // The rho rows print T(rho_i, c, .), with c read as gamma after dividing
  // rho_i by gamma; literally c is the Tt factor's 1/b and no division.
  const FieldElem cc = literal ? b.inv() : gamma;
  const auto rho_row = [=] {
    std::vector<Descriptor> xs;
    // X+X- on the weight space delta+1 has characteristic polynomial
    // x^3 + x^2 + (1-delta^2) x - gamma J/b; the printed polynomial swaps the
    // two middle coefficients, which only matters when delta != 0.
    const FieldElem e1 = literal ? o : o - delta * delta, e2 = literal ? o - delta * delta : o;
    for (const auto& r : cubic_roots(-(gamma / b) * J, e1, e2))
      xs.push_back(T(literal ? r : r / gamma, cc, delta));
    return sum(std::move(xs));
  };
  if (delta.is_zero()) {
    const FieldElem w = o - beta * gamma;
    if (b * beta * w * w == -o) {
      if (literal) {
        const ModuleParams p0 = ModuleParams::T(z, gamma, z), p1 = ModuleParams::T(z, gamma, -o);
        return row("γ≠0; δ=0; bβ(1−βγ)²=−1", [=, fr = &fr] {
          // Only this row's misprint is reproduced; the inner product is
          // read the default way.
          const Row inner = evaluate(p0, p1, *fr, false);
          return Descriptor::semi(T(z, gamma, -o), inner.build());
        });
      }
      return row("γ≠0; δ=0; bβ(1−βγ)²=−1", [=] { return sum({T(z, gamma, z), twice(T(z, gamma, -o))}); });
    }
    return row("γ≠0; δ=0; bβ(1−βγ)²≠−1", rho_row);
  }
  if (in_prime(delta)) throw Error("table 4 expects delta = 0 or delta outside GF(3) when gamma != 0");
  if (J.is_zero())
    return row("γ≠0; δ∉GF(3); J=0", [=] { return sum({T(z, gamma, delta - o), T(z, gamma, delta), T(z, gamma, delta + o)}); });
  const FieldElem e = delta * (delta + o) * (delta - o);
  if (-(gamma / b) * J != e * e) return row("γ≠0; δ∉GF(3); J≠0; −(γ/b)J≠(δ³−δ)²", rho_row);
  return row("γ≠0; δ∉GF(3); J≠0; −(γ/b)J=(δ³−δ)²", [=] {
    return sum({T(-delta * delta / cc, cc, delta), twice(T((o - delta * delta) / cc, cc, delta))});
  });
}

Row table5(const Factor& x, const Factor& y, bool literal) {
  const FieldElem b = x.b, c = x.c, d = x.d, beta = y.b, gamma = y.c, delta = y.d;
  const Field& f = b.field();
  const FieldElem z = f.zero(), o = f.one();
  const FieldElem a1 = b * c + d - o, a2 = b * c - d - o;
  const FieldElem al1 = beta * gamma + delta - o, al2 = beta * gamma - delta - o;
  const FieldElem K = a1 * a2 * b + al1 * al2 * beta;
  const FieldElem s = d + delta, cg = c + gamma;
  const bool exceptional =
      !c.is_zero() && !gamma.is_zero() && b == c.inv() && d.is_zero() && beta == gamma.inv() && delta.is_zero();
  const auto K_semi = [=] { return sum({T(K, z, z), twice(Tt(K.inv()))}); };

  const bool lower = gamma == -c;
  if (literal && !lower && gamma == c)
    return {{"5b", "γ=c (no row under the printed caption)"}, nullptr};

  if (lower) {
    const auto row = [](std::string r, std::function<Descriptor()> fn) { return Row{{"5a", std::move(r)}, std::move(fn)}; };
    const auto three_plus = [f = &f](Descriptor m) { return [f, m] { return sum({three(*f), m}); }; };
    if (s.is_zero()) {
      if (exceptional)
        return row("d+δ=0; b=1/c, d=0, β=1/γ, δ=0",
                   [f = &f] { return sum({three(*f), arrow_minus(k1, k2), arrow_minus(k2, k1)}); });
      const FieldElem E = o + b * c + b * b * c * c - d * d - c * beta - b * c * c * beta + c * c * beta * beta;
      // "1 c+ ((2 c+ 1) (+) 2 (+) 3)" only says that a 1 sits on top of the
      // rest; it is the module printed for d+delta=2; d=1; beta=b.
      const auto split = [f = &f] { return sum({three(*f), double_edge(k2, k1), double_edge(k1, k2)}); };
      if (beta == -b) {
        if (E.is_zero()) return row("d+δ=0; β=−b; E=0", split);
        return row("d+δ=0; β=−b; E≠0", three_plus(p0_descriptor()));
      }
      if (E.is_zero()) return row("d+δ=0; β≠−b; E=0", three_plus(m1_descriptor()));
      return row("d+δ=0; β≠−b; E≠0", K_semi);
    }
    if (s == o) {
      if (d == -o) {
        if (beta == b)
          return row("d+δ=1; d=−1; β=b",
                     [f = &f] { return sum({three(*f), double_edge(k2, k1), double_edge(k1, k2)}); });
        return row("d+δ=1; d=−1; β≠b", three_plus(p0_descriptor()));
      }
      if ((o - d) * b == d * beta) return row("d+δ=1; d≠−1; (1−d)b=dβ", three_plus(m1_descriptor()));
      return row("d+δ=1; d≠−1; (1−d)b≠dβ", K_semi);
    }
    if (s == -o) {
      if (d == o) {
        if (beta == b)
          return row("d+δ=2; d=1; β=b",
                     [f = &f] { return sum({three(*f), double_edge(k2, k1), double_edge(k1, k2)}); });
        return row("d+δ=2; d=1; β≠b", three_plus(p0_descriptor()));
      }
      if ((o + d) * b == -d * beta) return row("d+δ=2; d≠1; (1+d)b=−dβ", three_plus(m1_descriptor()));
      return row("d+δ=2; d≠1; (1+d)b≠−dβ", K_semi);
    }
    if (K.is_zero()) return row("d+δ∉GF(3); K=0", [=] { return sum({T(z, z, s - o), T(z, z, s), T(z, z, s + o)}); });
    // Each summand carries the X+^3 scalar K; T(x,0,e) has x(1-e^2).
    return row("d+δ∉GF(3); K≠0", [=] {
      std::vector<Descriptor> xs;
      for (const FieldElem& e : {s - o, s, s + o}) xs.push_back(T(literal ? K : K / (o - e * e), z, e));
      return sum(std::move(xs));
    });
  }

  const auto row = [](std::string r, std::function<Descriptor()> fn) { return Row{{"5b", std::move(r)}, std::move(fn)}; };
  if (exceptional)
    return row("b=1/c, d=0, β=1/γ, δ=0", [=] {
      const FieldElem e = (b + beta) / (b * beta);
      return sum({T(z, e, -o), T(z, e, z), T(z, e, o)});
    });
  const auto mu_row = [=] {
    std::vector<Descriptor> xs;
    for (const auto& m : cubic_roots(-cg * K, o - s * s, o)) xs.push_back(T(m / cg, cg, s));
    return sum(std::move(xs));
  };
  if (K.is_zero()) {
    if (s.is_zero()) return row("K=0; d+δ=0", [=] { return sum({T(z, cg, z), twice(T(z, cg, -o))}); });
    if (!in_prime(s)) return row("K=0; d+δ∉GF(3)", [=] { return sum({T(z, cg, s - o), T(z, cg, s), T(z, cg, s + o)}); });
    throw Error("table 5b has no row for K = 0 and d + delta in {1, 2}");
  }
  const FieldElem w = o - s * s;
  const FieldElem D = s * s * w * w;
  if (D == -K * cg) {
    const bool all = b * d * cg == s * w && beta * delta == b * d &&
                     gamma * (d - d * d * d) == c * (delta - delta * delta * delta);
    if (all) return row("K≠0; D=−K(c+γ); bd(c+γ)=√D, βδ=bd, γ(d−d³)=c(δ−δ³)", mu_row);
    // The characteristic polynomial x^3 + x^2 + (1-s^2) x - (c+gamma)K has
    // its double root where the derivative 2x + 1 - s^2 vanishes, at 1-s^2,
    // and its simple root at -s^2.  The printed -Delta and -1-Delta are read
    // literally only under the literal flag.
    return row("K≠0; D=−K(c+γ); otherwise", [=] {
      const FieldElem Dl = s * (o + s);
      const FieldElem dbl = literal ? -Dl : o - s * s, single = literal ? -o - Dl : -s * s;
      return sum({T(single / cg, cg, s), twice(T(dbl / cg, cg, s))});
    });
  }
  return row("K≠0; D≠−K(c+γ)", mu_row);
}

Row evaluate(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal) {
  const auto [l, r] = order_pair(make_factor(left, f), make_factor(right, f));
  using K = Factor::Kind;
  if (l.kind == K::One || (l.kind == K::Two && (r.kind == K::Two || r.kind == K::Tt))) return thm_row(l, r, f);
  if (l.kind == K::Two) return table2(r, literal);
  if (l.kind == K::Tt && r.kind == K::Tt) return table3(l, r);
  if (l.kind == K::Tt) return table4(l, r, literal, f);
  return table5(l, r, literal);
}

const Field& common_field(const ModuleParams& a, const ModuleParams& b, const Field& f) {
  int k = f.degree();
  for (const ModuleParams* p : {&a, &b}) {
    const ModuleParams q = p->kind() == ModuleParams::Kind::Dual ? dual_params(p->inner()) : *p;
    if (const Field* pf = q.field()) k = std::lcm(k, pf->degree());
  }
  if (k > 6) throw Error("parameters live in incompatible fields");
  return gf(k);
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {{"thm", "(1) 1⊗V"}, "V", ""},
      {{"thm", "(2) 2⊗2"}, "1 ⊕ 3", ""},
      {{"thm", "(3) 2⊗Tt(b,1/b,0)"}, "Tt(b,1/b,0) ⊕ T(1/b,0,0)", ""},
      {{"2", "c=0; d=0; b=0"}, "M1", ""},
      {{"2", "c=0; d=0; b≠0"}, "Tt(1/b,b,0) ⊂+ Tt(1/b,b,0)", ""},
      {{"2", "c=0; d=1; b=0"}, "3 ⊕ (2 → 1)", ""},
      {{"2", "c=0; d=1; b≠0"}, "3 ⊕ (2 ⊂+ 1)", ""},
      {{"2", "c=0; d=2; b=0"}, "3 ⊕ (1 → 2)", ""},
      {{"2", "c=0; d=2; b≠0"}, "3 ⊕ (1 ⊂+ 2)", ""},
      {{"2", "c=0; d∉GF(3)"}, "T(b(d−1)/d,0,d−1) ⊕ T(b(d+1)/d,0,d+1)", ""},
      {{"2", "c≠0; d=0; b=0"}, "T(0,c,1) ⊂+ T(0,c,1)", ""},
      {{"2", "c≠0; d=0; b=1/c"}, "T(0,c,1) ⊕ T(2/c,c,1)", "T(0,c,1) ⊕ T(0,c,1)"},
      {{"2", "c≠0; d=0; b≠0,1/c"}, "T(b+√(b/c),c,1) ⊕ T(b−√(b/c),c,1)", ""},
      {{"2", "c≠0; d∉GF(3); b=0"}, "T(0,c,d+1) ⊕ T(0,c,d−1)", ""},
      {{"2", "c≠0; d∉GF(3); 1−bc+d=0"}, "T(0,c,d) ⊕ T(0,c,d+1)", ""},
      {{"2", "c≠0; d∉GF(3); 1−bc−d=0"}, "T(0,c,d−1) ⊕ T(0,c,d)", ""},
      {{"2", "c≠0; d∉GF(3); b≠0, 1−bc±d≠0; bc+d²=0"}, "T(b+d/c,c,d+1) ⊂+ T(b+d/c,c,d+1)", ""},
      {{"2", "c≠0; d∉GF(3); b≠0, 1−bc±d≠0; bc+d²≠0"}, "T(b+(d±√(bc+d²))/c,c,d+1)", ""},
      {{"3", "b=−β"}, "3 ⊕ (2 ← 1) ⊕ (1 ← 2)", ""},
      {{"3", "b≠−β"}, "T((b+β)/(bβ),0,0) ⊕ 2·Tt(bβ/(b+β),(b+β)/(bβ),0)", ""},
      {{"4", "γ=0; δ=0; β=−1/b"}, "3 ⊕ M1", ""},
      {{"4", "γ=0; δ=0; β≠−1/b"}, "T((1+bβ)/b,0,0) ⊕ (Tt(b/(1+bβ)) ⊂+ Tt(b/(1+bβ)))", ""},
      {{"4", "γ=0; δ=1"}, "T(1/b,0,0) ⊕ (Tt(b) ⊂+ Tt(b))", ""},
      {{"4", "γ=0; δ=2"}, "T(1/b,0,0) ⊕ (Tt(b) ⊂+ Tt(b))", ""},
      {{"4", "γ=0; δ∉GF(3); bβ(1−δ²)=−1"}, "T(0,0,δ−1) ⊕ T(0,0,δ) ⊕ T(0,0,δ+1)", ""},
      {{"4", "γ=0; δ∉GF(3); bβ(1−δ²)≠−1"},
       "T(J/(b(1−e²)),0,e), e=δ−1,δ,δ+1",
       "T(J,0,δ−1) ⊕ T(J,0,δ) ⊕ T(J,0,δ+1)"},
      {{"4", "γ≠0; δ=0; bβ(1−βγ)²=−1"},
       "T(0,γ,0) ⊕ (T(0,γ,−1) ⊂+ T(0,γ,−1))",
       "T(0,γ,−1) ⊂+ (T(0,γ,0) ⊗ T(0,γ,−1))"},
      {{"4", "γ≠0; δ=0; bβ(1−βγ)²≠−1"}, "T(ρᵢ/γ,γ,0), i=1,2,3", "T(ρᵢ,c,0) with c=1/b"},
      {{"4", "γ≠0; δ∉GF(3); J=0"}, "T(0,γ,δ−1) ⊕ T(0,γ,δ) ⊕ T(0,γ,δ+1)", ""},
      {{"4", "γ≠0; δ∉GF(3); J≠0; −(γ/b)J≠(δ³−δ)²"},
       "T(ρᵢ/γ,γ,δ), ρ the roots of λ³+λ²+(1−δ²)λ−(γ/b)J",
       "T(ρᵢ,c,δ) with c=1/b, ρ the roots of λ³+(1−δ²)λ²+λ−(γ/b)J"},
      {{"4", "γ≠0; δ∉GF(3); J≠0; −(γ/b)J=(δ³−δ)²"},
       "T(−δ²/γ,γ,δ) ⊕ (T((1−δ²)/γ,γ,δ) ⊂+ T((1−δ²)/γ,γ,δ))",
       "the same with c=1/b in place of γ"},
      {{"5a", "d+δ=0; b=1/c, d=0, β=1/γ, δ=0"}, "3 ⊕ (1 → 2) ⊕ (2 → 1)", ""},
      {{"5a", "d+δ=0; β=−b; E=0"}, "3 ⊕ (2 ⊂+ 1) ⊕ (1 ⊂+ 2)", ""},
      {{"5a", "d+δ=0; β=−b; E≠0"}, "3 ⊕ P0", ""},
      {{"5a", "d+δ=0; β≠−b; E=0"}, "3 ⊕ M1", ""},
      {{"5a", "d+δ=0; β≠−b; E≠0"}, "T(K,0,0) ⊕ (Tt(1/K) ⊂+ Tt(1/K))", ""},
      {{"5a", "d+δ=1; d=−1; β=b"}, "3 ⊕ (2 ⊂+ 1) ⊕ (1 ⊂+ 2)", ""},
      {{"5a", "d+δ=1; d=−1; β≠b"}, "3 ⊕ P0", ""},
      {{"5a", "d+δ=1; d≠−1; (1−d)b=dβ"}, "3 ⊕ M1", ""},
      {{"5a", "d+δ=1; d≠−1; (1−d)b≠dβ"}, "T(K,0,0) ⊕ (Tt(1/K) ⊂+ Tt(1/K))", ""},
      {{"5a", "d+δ=2; d=1; β=b"}, "3 ⊕ (2 ⊂+ 1) ⊕ (1 ⊂+ 2)", ""},
      {{"5a", "d+δ=2; d=1; β≠b"}, "3 ⊕ P0", ""},
      {{"5a", "d+δ=2; d≠1; (1+d)b=−dβ"}, "3 ⊕ M1", ""},
      {{"5a", "d+δ=2; d≠1; (1+d)b≠−dβ"}, "T(K,0,0) ⊕ (Tt(1/K) ⊂+ Tt(1/K))", ""},
      {{"5a", "d+δ∉GF(3); K=0"}, "T(0,0,d+δ−1) ⊕ T(0,0,d+δ) ⊕ T(0,0,d+δ+1)", ""},
      {{"5a", "d+δ∉GF(3); K≠0"},
       "T(K/(1−e²),0,e), e=d+δ−1,d+δ,d+δ+1",
       "T(K,0,d+δ−1) ⊕ T(K,0,d+δ) ⊕ T(K,0,d+δ+1)"},
      {{"5b", "b=1/c, d=0, β=1/γ, δ=0"}, "T(0,(b+β)/(bβ),−1) ⊕ T(0,(b+β)/(bβ),0) ⊕ T(0,(b+β)/(bβ),1)", ""},
      {{"5b", "K=0; d+δ=0"}, "T(0,c+γ,0) ⊕ (T(0,c+γ,−1) ⊂+ T(0,c+γ,−1))", ""},
      {{"5b", "K=0; d+δ∉GF(3)"}, "T(0,c+γ,d+δ−1) ⊕ T(0,c+γ,d+δ) ⊕ T(0,c+γ,d+δ+1)", ""},
      {{"5b", "K≠0; D=−K(c+γ); bd(c+γ)=√D, βδ=bd, γ(d−d³)=c(δ−δ³)"}, "T(μᵢ/(c+γ),c+γ,d+δ), i=1,2,3", ""},
      {{"5b", "K≠0; D=−K(c+γ); otherwise"},
       "T(−s²/(c+γ),c+γ,s) ⊕ (T((1−s²)/(c+γ),c+γ,s) ⊂+ T((1−s²)/(c+γ),c+γ,s)), s=d+δ",
       "T((−1−Δ)/(c+γ),c+γ,d+δ) ⊕ (T(−Δ/(c+γ),c+γ,d+δ) ⊂+ T(−Δ/(c+γ),c+γ,d+δ))"},
      {{"5b", "K≠0; D≠−K(c+γ)"}, "T(μᵢ/(c+γ),c+γ,d+δ), i=1,2,3", ""},
      {{"5b", "γ=c (no row under the printed caption)"}, "(not reachable: the caption reads γ≠−c)", "no row"},
  };
  return rows;
}

bool is_misprint_row(const CaseId& id) {
  for (const auto& r : table_rows())
    if (r.id == id) return !r.literal.empty();
  return false;
}

SymbolSet symbols(const ModuleParams& left, const ModuleParams& right, const Field& f0) {
  const Field& f = common_field(left, right, f0);
  auto [l, r] = order_pair(make_factor(left, f), make_factor(right, f));
  SymbolSet s;
  using K = Factor::Kind;
  if (rank(l.kind) < rank(K::Tt)) return s;
  const FieldElem o = f.one();
  const FieldElem b = l.b, c = l.c, d = l.d, beta = r.b, gamma = r.c, delta = r.d;
  s.a1 = b * c + d - o;
  s.a2 = b * c - d - o;
  s.alpha1 = beta * gamma + delta - o;
  s.alpha2 = beta * gamma - delta - o;
  s.J = o + *s.alpha1 * *s.alpha2 * b * beta;
  s.K = *s.a1 * *s.a2 * b + *s.alpha1 * *s.alpha2 * beta;
  const FieldElem sd = d + delta, w = o - sd * sd;
  s.D = sd * sd * w * w;
  s.Delta = sd * (o + sd);
  if (l.kind == K::Tt && r.kind == K::T)
    s.rho = poly_roots({-(gamma / b) * *s.J, o, o - delta * delta, o}).roots;
  if (l.kind == K::T && r.kind == K::T) s.mu = poly_roots({-(c + gamma) * *s.K, w, o, o}).roots;
  return s;
}

CaseId classify(const ModuleParams& left, const ModuleParams& right, const Field& f, bool literal) {
  return evaluate(left, right, common_field(left, right, f), literal).id;
}

Prediction predict(const ModuleParams& left, const ModuleParams& right, const Field& f0, bool literal) {
  const Field* f = &common_field(left, right, f0);
  Prediction out;
  for (;;) {
    const Row row = evaluate(left, right, *f, literal);
    out.id = row.id;
    out.field_degree = f->degree();
    if (!row.build) {
      out.error = "no table row applies";
      return out;
    }
    try {
      out.descriptor = row.build().normalized();
      return out;
    } catch (const FieldTooSmall& e) {
      const int k = std::lcm(f->degree(), e.required_degree());
      if (k > max_extension_degree() || k == f->degree()) {
        out.error = std::string(e.what()) + " (extension cap " + std::to_string(max_extension_degree()) + ")";
        return out;
      }
      f = &gf(k);
    }
  }
}

std::pair<FieldElem, FieldElem> product_cube_scalars(const ModuleParams& left, const ModuleParams& right,
                                                     const Field& f0, bool literal) {
  const Field& f = common_field(left, right, f0);
  const auto [l, r] = order_pair(make_factor(left, f), make_factor(right, f));
  using K = Factor::Kind;
  const FieldElem z = f.zero(), o = f.one();
  const auto single = [&](const Factor& x) -> std::pair<FieldElem, FieldElem> {
    if (x.kind == K::Tt) return {x.c, z};
    if (x.kind == K::T) return {x.b * (x.b * x.c + x.d - o) * (x.b * x.c - x.d - o), x.c};
    return {z, z};
  };
  if (l.kind == K::Tt && r.kind == K::Tt) return {(l.b + r.b) / (l.b * r.b), z};
  if (l.kind == K::Tt && r.kind == K::T) {
    const FieldElem al1 = r.b * r.c + r.d - o, al2 = r.b * r.c - r.d - o;
    return {l.b.inv() + r.b * al1 * al2, r.c};
  }
  if (l.kind == K::T && r.kind == K::T) {
    const FieldElem a1 = l.b * l.c + l.d - o, a2 = l.b * l.c - l.d - o;
    const FieldElem al1 = r.b * r.c + r.d - o, al2 = r.b * r.c - r.d - o;
    return {l.b * a1 * (literal ? a1 : a2) + r.b * al1 * al2, l.c + r.c};
  }
  const auto x = single(l), y = single(r);
  return {x.first + y.first, x.second + y.second};
}

}  // namespace sl2c3
