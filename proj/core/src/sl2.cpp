#include "sl2c3/sl2.hpp"

#include <cctype>
#include <sstream>

#include "sl2c3/decompose.hpp"

namespace sl2c3 {

// ------------------------------------------------------------ ModuleParams

ModuleParams ModuleParams::one() { return ModuleParams(); }

ModuleParams ModuleParams::two() {
  ModuleParams p;
  p.kind_ = Kind::Two;
  return p;
}

ModuleParams ModuleParams::T(FieldElem b, FieldElem c, FieldElem d) {
  if (b.field_ptr() != c.field_ptr() || b.field_ptr() != d.field_ptr())
    throw Error("T parameters from different fields");
  ModuleParams p;
  p.kind_ = Kind::T;
  p.b_ = b;
  p.c_ = c;
  p.d_ = d;
  return p;
}

ModuleParams ModuleParams::Tt(FieldElem b, FieldElem c, FieldElem d) {
  ModuleParams p = T(b, c, d);
  p.kind_ = Kind::Tt;
  return p;
}

ModuleParams ModuleParams::dual(const ModuleParams& inner) {
  ModuleParams p;
  p.kind_ = Kind::Dual;
  p.inner_ = std::make_shared<const ModuleParams>(inner);
  return p;
}

FieldElem ModuleParams::a1() const {
  if (!is_family()) throw Error("a1 is only defined for T and Tt");
  return b_ * c_ + d_ - b_.field().one();
}

FieldElem ModuleParams::a2() const {
  if (!is_family()) throw Error("a2 is only defined for T and Tt");
  return b_ * c_ - d_ - b_.field().one();
}

const ModuleParams& ModuleParams::inner() const {
  if (kind_ != Kind::Dual) throw Error("inner() of a non-dual module");
  return *inner_;
}

const Field* ModuleParams::field() const {
  switch (kind_) {
    case Kind::T:
    case Kind::Tt:
      return b_.field_ptr();
    case Kind::Dual:
      return inner_->field();
    default:
      return nullptr;
  }
}

int ModuleParams::dim() const {
  switch (kind_) {
    case Kind::One:
      return 1;
    case Kind::Two:
      return 2;
    case Kind::Dual:
      return inner_->dim();
    default:
      return 3;
  }
}

ModuleParams ModuleParams::lifted(const Field& target) const {
  switch (kind_) {
    case Kind::T:
      return T(lift(b_, target), lift(c_, target), lift(d_, target));
    case Kind::Tt:
      return Tt(lift(b_, target), lift(c_, target), lift(d_, target));
    case Kind::Dual:
      return dual(inner_->lifted(target));
    default:
      return *this;
  }
}

std::string ModuleParams::str() const {
  switch (kind_) {
    case Kind::One:
      return "One";
    case Kind::Two:
      return "Two";
    case Kind::T:
      return "T(" + b_.str() + "," + c_.str() + "," + d_.str() + ")";
    case Kind::Tt:
      return "Tt(" + b_.str() + "," + c_.str() + "," + d_.str() + ")";
    case Kind::Dual:
      return "Dual(" + inner_->str() + ")";
  }
  return "?";
}

bool ModuleParams::operator==(const ModuleParams& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::T:
    case Kind::Tt:
      return b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    case Kind::Dual:
      return *inner_ == *o.inner_;
    default:
      return true;
  }
}

bool is_admissible(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const Field& f = b.field();
  return !(b.is_zero() && c.is_zero() && (d == f.one() || d == -f.one()));
}

void check_admissible(const ModuleParams& p) {
  if (p.kind() == ModuleParams::Kind::Dual) return check_admissible(p.inner());
  if (p.is_family() && !is_admissible(p.b(), p.c(), p.d()))
    throw Error(p.str() + " is excluded: (b,c,d) = (0,0,+-1) gives a reducible module");
}

// ------------------------------------------------------------------ parser

namespace {

class ExprParser {
 public:
  ExprParser(const Field& f, const std::string& s) : f_(f), s_(s) {}

  ModuleParams parse() {
    ModuleParams p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("module expression: " + msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a module name");
    return s_.substr(start, pos_ - start);
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  FieldElem element() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '[') {
      while (pos_ < s_.size() && s_[pos_] != ']') ++pos_;
      if (pos_ >= s_.size()) fail("unterminated element literal");
      ++pos_;
    } else {
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (start == pos_) fail("expected a field element");
    try {
      return parse_elem(f_, s_.substr(start, pos_ - start));
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  ModuleParams expr() {
    const std::size_t start = pos_;
    const std::string name = ident();
    if (name == "One") return ModuleParams::one();
    if (name == "Two") return ModuleParams::two();
    if (name == "Dual") {
      expect('(');
      ModuleParams inner = expr();
      expect(')');
      return ModuleParams::dual(inner);
    }
    if (name == "T" || name == "Tt") {
      expect('(');
      const FieldElem b = element();
      expect(',');
      const FieldElem c = element();
      expect(',');
      const FieldElem d = element();
      expect(')');
      return name == "T" ? ModuleParams::T(b, c, d) : ModuleParams::Tt(b, c, d);
    }
    pos_ = start;
    fail("unknown module '" + name + "'");
  }

  const Field& f_;
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ModuleParams parse_module_params(const Field& f, const std::string& text) {
  ModuleParams p = ExprParser(f, text).parse();
  check_admissible(p);
  return p;
}

// ------------------------------------------------------------ constructors

Rep Rep::lifted(const Field& target) const {
  Rep r{xminus.lifted(target), h.lifted(target), xplus.lifted(target), std::nullopt};
  if (params) r.params = params->lifted(target);
  return r;
}

Rep make_standard(int n, const Field& f) {
  Rep r;
  switch (n) {
    case 1:
      r.xminus = r.h = r.xplus = Mat(f, 1, 1);
      r.params = ModuleParams::one();
      return r;
    case 2:
      r.xminus = Mat::from_ints(f, {{0, 0}, {1, 0}});
      r.h = Mat::from_ints(f, {{1, 0}, {0, -1}});
      r.xplus = Mat::from_ints(f, {{0, 1}, {0, 0}});
      r.params = ModuleParams::two();
      return r;
    case 3:
      return make_T(f.zero(), f.zero(), f.zero());
    default:
      throw Error("standard modules exist only for N = 1, 2, 3");
  }
}

Rep make_T_unchecked(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const Field& f = b.field();
  const FieldElem one = f.one(), z = f.zero();
  const FieldElem a1 = b * c + d - one, a2 = b * c - d - one;
  Rep r;
  r.xminus = Mat::from_elems(f, {{z, z, c}, {one, z, z}, {z, one, z}});
  r.h = Mat::from_elems(f, {{d - one, z, z}, {z, d, z}, {z, z, d + one}});
  r.xplus = Mat::from_elems(f, {{z, a1, z}, {z, z, a2}, {b, z, z}});
  r.params = ModuleParams::T(b, c, d);
  return r;
}

Rep make_Ttilde_unchecked(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  const Field& f = b.field();
  const FieldElem one = f.one(), z = f.zero();
  const FieldElem a1 = b * c + d - one, a2 = b * c - d - one;
  Rep r;
  r.xminus = Mat::from_elems(f, {{z, z, b}, {a1, z, z}, {z, a2, z}});
  r.h = Mat::from_elems(f, {{d - one, z, z}, {z, d, z}, {z, z, d + one}});
  r.xplus = Mat::from_elems(f, {{z, one, z}, {z, z, one}, {c, z, z}});
  r.params = ModuleParams::Tt(b, c, d);
  return r;
}

Rep make_T(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  check_admissible(ModuleParams::T(b, c, d));
  return make_T_unchecked(b, c, d);
}

Rep make_Ttilde(const FieldElem& b, const FieldElem& c, const FieldElem& d) {
  check_admissible(ModuleParams::Tt(b, c, d));
  return make_Ttilde_unchecked(b, c, d);
}

Rep build(const ModuleParams& p, const Field& f) {
  switch (p.kind()) {
    case ModuleParams::Kind::One:
      return make_standard(1, f);
    case ModuleParams::Kind::Two:
      return make_standard(2, f);
    case ModuleParams::Kind::T: {
      const ModuleParams q = p.lifted(f);
      return make_T(q.b(), q.c(), q.d());
    }
    case ModuleParams::Kind::Tt: {
      const ModuleParams q = p.lifted(f);
      return make_Ttilde(q.b(), q.c(), q.d());
    }
    case ModuleParams::Kind::Dual: {
      Rep r = dual(build(p.inner(), f));
      r.params = p.lifted(f);
      return r;
    }
  }
  throw Error("unknown module kind");
}

Rep dual(const Rep& r) {
  Rep out{-r.xminus.transpose(), -r.h.transpose(), -r.xplus.transpose(), std::nullopt};
  if (r.params) out.params = ModuleParams::dual(*r.params);
  if (auto bad = validate(out)) throw Error("dual violates the sl(2) relations: " + *bad);
  return out;
}

std::optional<std::string> validate(const Rep& r) {
  const auto first_nonzero = [](const Mat& m, const std::string& name) -> std::optional<std::string> {
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m.code(i, j) != 0)
          return name + " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    return std::nullopt;
  };
  const int n = r.dim();
  for (const Mat* m : {&r.xminus, &r.h, &r.xplus})
    if (m->rows() != n || m->cols() != n || &m->field() != &r.field())
      return std::string("generator shape or field mismatch");
  const Field& f = r.field();
  const Mat& xp = r.xplus;
  const Mat& xm = r.xminus;
  const Mat& h = r.h;
  if (auto e = first_nonzero(xp * xm - xm * xp - h, "[X+,X-]-H")) return e;
  const FieldElem two = f.from_int(2);
  if (auto e = first_nonzero(h * xp - xp * h - xp.scaled(two), "[H,X+]-2X+")) return e;
  if (auto e = first_nonzero(h * xm - xm * h + xm.scaled(two), "[H,X-]+2X-")) return e;
  return std::nullopt;
}

namespace {

bool irreducible_by_points(const Rep& r) {
  const Field& f = r.field();
  const int n = r.dim();
  const int q = f.order();
  for (int lead = 0; lead < n; ++lead) {
    const int tail = n - 1 - lead;
    long long count = 1;
    for (int j = 0; j < tail; ++j) count *= q;
    for (long long idx = 0; idx < count; ++idx) {
      Vec v(n, 0);
      v[lead] = 1;
      long long x = idx;
      for (int j = 0; j < tail; ++j) {
        v[lead + 1 + j] = static_cast<Code>(x % q);
        x /= q;
      }
      if (spin(r, v).dim() != n) return false;
    }
  }
  return true;
}

}  // namespace

bool is_irreducible(const Rep& r) {
  if (r.dim() == 0) return false;
  if (r.dim() == 1) return true;
  if (r.dim() <= 3 && r.field().order() <= 27) return irreducible_by_points(r);
  Rep cur = r;
  for (;;) {
    try {
      for (const auto& g : simple_generator_spaces(cur))
        for (const auto& v : g.basis())
          if (spin(cur, v).dim() != cur.dim()) return false;
      return true;
    } catch (const FieldTooSmall& e) {
      const int need = e.required_degree();
      if (need <= cur.field().degree() || need > max_extension_degree()) throw;
      cur = cur.lifted(make_field(need));
    }
  }
}

}  // namespace sl2c3
