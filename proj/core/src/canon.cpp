#include "sl2c3/canon.hpp"

#include "sl2c3/tensor.hpp"

namespace sl2c3 {

CanonicalClass CanonicalClass::one() { return CanonicalClass(); }

CanonicalClass CanonicalClass::two() {
  CanonicalClass c;
  c.kind_ = Kind::Two;
  return c;
}

CanonicalClass CanonicalClass::tt(const FieldElem& b) {
  if (b.is_zero()) throw Error("Tt(b,1/b,0) needs b != 0");
  CanonicalClass c;
  c.kind_ = Kind::Tt;
  c.b_ = b;
  c.c_ = b.inv();
  c.d_ = b.field().zero();
  return c;
}

CanonicalClass CanonicalClass::t(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  CanonicalClass r;
  r.kind_ = Kind::T;
  r.b_ = b;
  r.c_ = c;
  r.d_ = d;
  return r;
}

int CanonicalClass::dim() const {
  switch (kind_) {
    case Kind::One:
      return 1;
    case Kind::Two:
      return 2;
    default:
      return 3;
  }
}

ModuleParams CanonicalClass::to_params() const {
  switch (kind_) {
    case Kind::One:
      return ModuleParams::one();
    case Kind::Two:
      return ModuleParams::two();
    case Kind::Tt:
      return ModuleParams::Tt(b_, c_, d_);
    case Kind::T:
      return ModuleParams::T(b_, c_, d_);
  }
  throw Error("unknown class kind");
}

CanonicalClass CanonicalClass::lifted(const Field& target) const {
  switch (kind_) {
    case Kind::Tt:
      return tt(lift(b_, target));
    case Kind::T:
      return canonical_T(lift(b_, target), lift(c_, target), lift(d_, target));
    default:
      return *this;
  }
}

std::string CanonicalClass::str() const {
  switch (kind_) {
    case Kind::One:
      return "One";
    case Kind::Two:
      return "Two";
    case Kind::Tt:
      return "Tt(" + b_.str() + ")";
    case Kind::T:
      return "T(" + b_.str() + "," + c_.str() + "," + d_.str() + ")";
  }
  return "?";
}

bool CanonicalClass::operator==(const CanonicalClass& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Tt) return b_ == o.b_;
  if (kind_ == Kind::T) return b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
  return true;
}

bool CanonicalClass::operator<(const CanonicalClass& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  if (kind_ == Kind::One || kind_ == Kind::Two) return false;
  if (b_ != o.b_) return encoding_less(b_, o.b_);
  if (kind_ == Kind::Tt) return false;
  if (c_ != o.c_) return encoding_less(c_, o.c_);
  if (d_ != o.d_) return encoding_less(d_, o.d_);
  return false;
}

ModuleParams dual_params(const ModuleParams& p) {
  switch (p.kind()) {
    case ModuleParams::Kind::One:
    case ModuleParams::Kind::Two:
      return p;
    case ModuleParams::Kind::T:
      return ModuleParams::T(-p.b(), -p.c(), -p.d());
    case ModuleParams::Kind::Tt:
      return ModuleParams::Tt(-p.b(), -p.c(), -p.d());
    case ModuleParams::Kind::Dual: {
      // The dual of Dual(x) is x itself, written without Dual.
      const ModuleParams& in = p.inner();
      return in.kind() == ModuleParams::Kind::Dual ? dual_params(in.inner()) : in;
    }
  }
  throw Error("unknown module kind");
}

std::optional<Triple> ttilde_to_T(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const Field& f = b.field();
  const FieldElem one = f.one();
  const FieldElem a1 = b * c + d - one, a2 = b * c - d - one;
  const int zeros = int(a1.is_zero()) + int(a2.is_zero()) + int(b.is_zero());
  if (zeros >= 2) return std::nullopt;
  if (!a1.is_zero() && !a2.is_zero()) return Triple{c / (a1 * a2), a1 * a2 * b, d};
  if (a1.is_zero()) return Triple{(b * a2).inv(), f.zero(), d + one};
  return Triple{(b * a1).inv(), f.zero(), d - one};
}

FieldElem normalize_twozeros(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  if (!is_admissible(b, c, d)) throw Error("Tt(0,0,+-1) is excluded");
  const FieldElem one = b.field().one();
  const FieldElem a1 = b * c + d - one, a2 = b * c - d - one;
  const int zeros = int(a1.is_zero()) + int(a2.is_zero()) + int(b.is_zero());
  if (zeros < 2) throw Error("normalize_twozeros needs two of a1, a2, b to vanish");
  // X+^3 acts on Tt(b,c,d) as c and on Tt(b0,1/b0,0) as 1/b0.
  if (c.is_zero()) throw Error("Tt with c = 0 and two vanishing parameters is reducible");
  return c.inv();
}

std::pair<FieldElem, FieldElem> shift_d(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const FieldElem one = b.field().one();
  if (c.is_zero()) throw Error("shift_d needs c != 0");
  if (d == one) return {(b * c - d - one) / c, c};
  if (d == -one) return {(b * c + d - one) / c, c};
  throw Error("shift_d needs d = 1 or d = -1");
}

CanonicalClass canonical_T(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  if (c.is_zero()) return CanonicalClass::t(b, c, d);
  const FieldElem one = b.field().one();
  const FieldElem a1 = b * c + d - one, a2 = b * c - d - one;
  CanonicalClass best = CanonicalClass::t(b, c, d);
  for (const auto& cand : {CanonicalClass::t(a1 / c, c, d + one), CanonicalClass::t(a2 / c, c, d - one)})
    if (encoding_less(cand.d(), best.d())) best = cand;
  return best;
}

CanonicalClass canonicalize(const ModuleParams& p) {
  switch (p.kind()) {
    case ModuleParams::Kind::One:
      return CanonicalClass::one();
    case ModuleParams::Kind::Two:
      return CanonicalClass::two();
    case ModuleParams::Kind::T:
      return canonical_T(p.b(), p.c(), p.d());
    case ModuleParams::Kind::Tt: {
      if (auto t = ttilde_to_T(p.b(), p.c(), p.d())) {
        const auto& [b, c, d] = *t;
        return canonical_T(b, c, d);
      }
      return CanonicalClass::tt(normalize_twozeros(p.b(), p.c(), p.d()));
    }
    case ModuleParams::Kind::Dual:
      return canonicalize(dual_params(p.inner()));
  }
  throw Error("unknown module kind");
}

namespace {

// Coefficient s with w = s v, for nonzero v; throws when w is not a multiple.
FieldElem ratio(const Field& f, const Vec& w, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      const FieldElem s = f.from_code(w[i]) / f.from_code(v[i]);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (w[j] != f.mul(s.code(), v[j])) throw Error("vector is not a multiple");
      return s;
    }
  throw Error("ratio against the zero vector");
}

const WeightSpace& weight_space_of(const WeightDecomp& ws, const FieldElem& rho) {
  for (const auto& w : ws)
    if (w.weight == rho) return w;
  throw Error("module has no weight " + rho.str());
}

}  // namespace

CanonicalClass recover_params(const Rep& r) {
  const Field& f = r.field();
  const FieldElem one = f.one();
  if (r.dim() == 1) {
    if (!r.xminus.is_zero() || !r.xplus.is_zero() || !r.h.is_zero()) throw Error("invalid 1-dimensional module");
    return CanonicalClass::one();
  }
  if (r.dim() == 2) {
    if (!is_irreducible(r)) throw Error("2-dimensional module is reducible");
    return CanonicalClass::two();
  }
  if (r.dim() != 3) throw Error("recover_params needs dimension <= 3");
  const WeightDecomp ws = weight_spaces(r);
  if (ws.size() != 3) throw Error("3-dimensional module without three distinct weights");
  const auto c_opt = r.xminus.pow(3).scalar_value();
  if (!c_opt) throw Error("X-^3 is not scalar; module is not irreducible");
  const FieldElem c = *c_opt;

  // From a top vector e1 of weight d-1 the chain e2 = X- e1, e3 = X- e2
  // reproduces T(b,c,d) with X+ e1 = b e3.
  const auto from_top = [&](const FieldElem& top_weight) {
    const Vec e1 = weight_space_of(ws, top_weight).space.basis()[0];
    const Vec e3 = r.xminus.apply(r.xminus.apply(e1));
    const FieldElem b = ratio(f, r.xplus.apply(e1), e3);
    return CanonicalClass::t(b, c, top_weight + one);
  };

  CanonicalClass out;
  if (!c.is_zero()) {
    const CanonicalClass raw = from_top(ws[0].weight);
    out = canonical_T(raw.b(), c, raw.d());
  } else if (rank(r.xminus) == 2) {
    const Subspace low = kernel(r.xminus);
    FieldElem lowest = f.zero();
    bool found = false;
    for (const auto& w : ws)
      if (w.space.intersect(low).dim() == 1) {
        lowest = w.weight;
        found = true;
      }
    if (!found) throw Error("no lowest weight vector");
    out = from_top(lowest - one - one);
  } else {
    const auto alpha = r.xplus.pow(3).scalar_value();
    if (!alpha || alpha->is_zero()) throw Error("module is not irreducible");
    out = CanonicalClass::tt(alpha->inv());
  }
  if (!is_irreducible(r)) throw Error("module is not irreducible");
  return out;
}

bool is_isomorphic_by_intertwiner(const Rep& a, const Rep& b) {
  if (a.dim() != b.dim()) return false;
  if (&a.field() != &b.field()) throw Error("is_isomorphic: modules over different fields");
  return solve_intertwiner({a.xminus, a.h, a.xplus}, {b.xminus, b.h, b.xplus}).has_value();
}

bool is_isomorphic(const Rep& a, const Rep& b) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() <= 3 && is_irreducible(a) && is_irreducible(b)) return recover_params(a) == recover_params(b);
  return is_isomorphic_by_intertwiner(a, b);
}

}  // namespace sl2c3
