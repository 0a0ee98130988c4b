#include "checks.hpp"

#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sl2c3/canon.hpp"
#include "sl2c3/decompose.hpp"
#include "sl2c3/oracle.hpp"
#include "sl2c3/poly.hpp"
#include "sl2c3/tensor.hpp"

namespace sl2c3::checks {

void Result::fail(const std::string& what) {
  if (failures++ == 0) witness = what;
}

void Result::merge(const Result& o) {
  cases += o.cases;
  if (o.failures > 0 && failures == 0) witness = o.witness;
  failures += o.failures;
}

std::string Result::summary() const {
  std::ostringstream os;
  os << cases << " cases, " << failures << " failures";
  if (failures) os << "; first: " << witness;
  return os.str();
}

namespace {

using Triple3 = std::array<FieldElem, 3>;

std::vector<Triple3> triples(const Field& f, Scope s) {
  const auto els = f.elements();
  std::vector<Triple3> out;
  if (s.sample == 0) {
    for (const auto& b : els)
      for (const auto& c : els)
        for (const auto& d : els) out.push_back({b, c, d});
    return out;
  }
  std::mt19937_64 rng(s.seed);
  std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
  for (int i = 0; i < s.sample; ++i) out.push_back({els[pick(rng)], els[pick(rng)], els[pick(rng)]});
  return out;
}

std::string name(const char* fam, const Triple3& t) {
  return std::string(fam) + "(" + t[0].str() + "," + t[1].str() + "," + t[2].str() + ")";
}

std::vector<Mat> gens(const Rep& r) { return {r.xminus, r.h, r.xplus}; }

Mat mat3(const Field& f, std::initializer_list<std::initializer_list<FieldElem>> rows) {
  std::vector<std::vector<FieldElem>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return Mat::from_elems(f, v);
}

int zeros(const FieldElem& a1, const FieldElem& a2, const FieldElem& b) {
  return static_cast<int>(a1.is_zero()) + static_cast<int>(a2.is_zero()) + static_cast<int>(b.is_zero());
}

Mat random_mat(const Field& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, f.order() - 1);
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set_code(i, j, static_cast<Code>(pick(rng)));
  return m;
}

}  // namespace

bool conjugates(const Mat& s, const Rep& from, const Rep& to) {
  if (s.rows() != from.dim() || s.cols() != from.dim() || to.dim() != from.dim()) return false;
  if (rank(s) != s.rows()) return false;
  return s * from.xminus == to.xminus * s && s * from.h == to.h * s && s * from.xplus == to.xplus * s;
}

bool certify_isomorphic(const Rep& a, const Rep& b) {
  if (a.dim() != b.dim()) return false;
  const auto p = solve_intertwiner(gens(a), gens(b));
  return p && conjugates(*p, a, b);
}

bool certify_not_isomorphic(const Rep& a, const Rep& b) {
  if (a.dim() != b.dim()) return true;
  if (intertwiner_space(gens(a), gens(b)).empty()) return true;
  try {
    return !solve_intertwiner(gens(a), gens(b)).has_value();
  } catch (const Error&) {
    return false;  // inconclusive search is not a certificate
  }
}

Result lemma_families(const Field& f, Scope scope) {
  Result res;
  std::set<CanonicalClass> classes;
  for (const auto& t : triples(f, scope)) {
    if (!is_admissible(t[0], t[1], t[2])) continue;
    for (const bool tilde : {false, true}) {
      const Rep r = tilde ? make_Ttilde(t[0], t[1], t[2]) : make_T(t[0], t[1], t[2]);
      if (!is_irreducible(r)) continue;
      ++res.cases;
      const ModuleParams p = tilde ? ModuleParams::Tt(t[0], t[1], t[2]) : ModuleParams::T(t[0], t[1], t[2]);
      const CanonicalClass cc = canonicalize(p);
      const std::string who = name(tilde ? "Tt" : "T", t);
      if (cc.kind() != CanonicalClass::Kind::T && cc.kind() != CanonicalClass::Kind::Tt) {
        res.fail(who + " has no family representative");
        continue;
      }
      if (!certify_isomorphic(r, build(cc.to_params(), f))) res.fail(who + " not isomorphic to " + cc.str());
      classes.insert(cc);
    }
  }
  const std::vector<CanonicalClass> v(classes.begin(), classes.end());
  std::vector<Rep> reps;
  for (const auto& c : v) reps.push_back(build(c.to_params(), f));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      ++res.cases;
      if (!certify_not_isomorphic(reps[i], reps[j])) res.fail(v[i].str() + " and " + v[j].str() + " are isomorphic");
    }
  return res;
}

Result lemma_duals(const Field& f, Scope scope) {
  Result res;
  const FieldElem o = f.one(), z = f.zero();
  const Mat s = mat3(f, {{z, z, o}, {z, -o, z}, {o, z, z}});
  for (const auto& t : triples(f, scope)) {
    if (!is_admissible(t[0], t[1], t[2])) continue;
    const Triple3 neg{-t[0], -t[1], -t[2]};
    res.cases += 2;
    if (!conjugates(s, dual(make_T(t[0], t[1], t[2])), make_T(neg[0], neg[1], neg[2])))
      res.fail("S does not carry T*" + name("", t) + " to " + name("T", neg));
    if (!conjugates(s, dual(make_Ttilde(t[0], t[1], t[2])), make_Ttilde(neg[0], neg[1], neg[2])))
      res.fail("S does not carry Tt*" + name("", t) + " to " + name("Tt", neg));
    if (dual_params(ModuleParams::T(t[0], t[1], t[2])) != ModuleParams::T(neg[0], neg[1], neg[2]))
      res.fail("dual_params disagrees on " + name("T", t));
  }
  return res;
}

Result lemma_ttilde(const Field& f, Scope scope) {
  Result res;
  const FieldElem o = f.one(), z = f.zero();
  std::vector<Rep> all_t;
  for (const auto& t : triples(f, {}))
    if (is_admissible(t[0], t[1], t[2])) all_t.push_back(make_T(t[0], t[1], t[2]));

  for (const auto& t : triples(f, scope)) {
    const FieldElem &b = t[0], &c = t[1], &d = t[2];
    if (!is_admissible(b, c, d)) continue;
    ++res.cases;
    const Rep tt = make_Ttilde(b, c, d);
    const FieldElem a1 = b * c + d - o, a2 = b * c - d - o;
    const std::string who = name("Tt", t);
    if (zeros(a1, a2, b) >= 2) {
      for (const auto& r : all_t)
        if (!certify_not_isomorphic(tt, r)) {
          res.fail(who + " is isomorphic to a T although two of a1, a2, b vanish");
          break;
        }
      if (ttilde_to_T(b, c, d)) res.fail("ttilde_to_T accepts " + who);
      continue;
    }
    Mat s;
    Triple3 target;
    if (!a1.is_zero() && !a2.is_zero()) {
      // The diagonal as usually printed, diag(1/a1, 1, 1/(a1 a2)), only works
      // when a1 = 1; the first two entries belong the other way round.
      s = mat3(f, {{o, z, z}, {z, a1.inv(), z}, {z, z, (a1 * a2).inv()}});
      target = {c / (a1 * a2), a1 * a2 * b, d};
    } else if (a1.is_zero()) {
      s = mat3(f, {{z, o, z}, {z, z, a2.inv()}, {(b * a2).inv(), z, z}});
      target = {(b * a2).inv(), z, d + o};
    } else {
      s = mat3(f, {{z, z, o}, {b.inv(), z, z}, {z, (b * a1).inv(), z}});
      target = {(b * a1).inv(), z, d - o};
    }
    if (!is_admissible(target[0], target[1], target[2])) {
      res.fail(who + " maps to the excluded " + name("T", target));
      continue;
    }
    if (!conjugates(s, tt, make_T(target[0], target[1], target[2])))
      res.fail("S does not carry " + who + " to " + name("T", target));
    const auto mine = ttilde_to_T(b, c, d);
    if (!mine || std::get<0>(*mine) != target[0] || std::get<1>(*mine) != target[1] || std::get<2>(*mine) != target[2])
      res.fail("ttilde_to_T disagrees on " + who);
  }
  return res;
}

Result lemma_twozeros(const Field& f, Scope scope) {
  Result res;
  const FieldElem o = f.one();
  for (const auto& t : triples(f, scope)) {
    const FieldElem &b = t[0], &c = t[1], &d = t[2];
    if (!is_admissible(b, c, d)) continue;
    const FieldElem a1 = b * c + d - o, a2 = b * c - d - o;
    if (zeros(a1, a2, b) < 2) continue;
    ++res.cases;
    const std::string who = name("Tt", t);
    if (a1.is_zero() && a2.is_zero() && (!d.is_zero() || c != b.inv())) res.fail(who + ": a1 = a2 = 0 but not (b,1/b,0)");
    const FieldElem b0 = normalize_twozeros(b, c, d);
    if (!certify_isomorphic(make_Ttilde(b, c, d), make_Ttilde(b0, b0.inv(), f.zero())))
      res.fail(who + " not isomorphic to Tt(" + b0.str() + ",1/" + b0.str() + ",0)");
  }
  return res;
}

Result lemma_dint(const Field& f, Scope scope) {
  Result res;
  const FieldElem o = f.one(), z = f.zero();
  const auto els = f.elements();
  for (const auto& t : triples(f, scope)) {
    const FieldElem &b = t[0], &c = t[1], &d = t[2];
    if (c.is_zero() || (d != o && d != -o)) continue;
    res.cases += 2;
    const auto [b1, c1] = shift_d(b, c, d);
    const Rep from = make_T(b, c, d), to = make_T(b1, c1, z);
    if (d == o) {
      const FieldElem a2 = b * c - d - o;
      const Mat s = mat3(f, {{z, z, o}, {c.inv(), z, z}, {z, c.inv(), z}});
      if (b1 != a2 / c || c1 != c) res.fail("shift_d disagrees on " + name("T", t));
      if (!conjugates(s, from, to)) res.fail("S does not carry " + name("T", t) + " to d = 0");
    } else if (!certify_isomorphic(from, to)) {
      res.fail(name("T", t) + " not isomorphic to T(" + b1.str() + "," + c1.str() + ",0)");
    }

    const Rep tt = make_Ttilde(b, c, d);
    bool found = false;
    for (const auto& x : els) {
      for (const auto& y : els)
        if (certify_isomorphic(tt, make_Ttilde(x, y, z))) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) res.fail(name("Tt", t) + " has no d = 0 form");
  }
  return res;
}

Result field_axioms(const Field& f, int random, std::uint64_t seed) {
  Result res;
  const FieldElem z = f.zero(), o = f.one();
  const auto check = [&](const FieldElem& a, const FieldElem& b, const FieldElem& c) {
    ++res.cases;
    const std::string at = " at (" + a.str() + "," + b.str() + "," + c.str() + ")";
    if ((a + b) + c != a + (b + c)) res.fail("+ not associative" + at);
    if ((a * b) * c != a * (b * c)) res.fail("* not associative" + at);
    if (a + b != b + a || a * b != b * a) res.fail("not commutative" + at);
    if (a * (b + c) != a * b + a * c) res.fail("not distributive" + at);
    if (a + z != a || a * o != a || a * z != z) res.fail("identities fail" + at);
    if (a + (-a) != z || a - b != a + (-b)) res.fail("negation fails" + at);
    if (!a.is_zero() && (a * a.inv() != o || b / a != b * a.inv())) res.fail("inverse fails" + at);
    if (a + a + a != z) res.fail("characteristic is not 3" + at);
  };
  const auto els = f.elements();
  if (random == 0) {
    for (const auto& a : els)
      for (const auto& b : els)
        for (const auto& c : els) check(a, b, c);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int i = 0; i < random; ++i) check(els[pick(rng)], els[pick(rng)], els[pick(rng)]);
  }
  return res;
}

Result frobenius(const Field& f, int random, std::uint64_t seed) {
  Result res;
  const auto els = f.elements();
  std::set<Code> image;
  for (const auto& a : els) image.insert(a.pow(3).code());
  if (static_cast<int>(image.size()) != f.order()) res.fail("cubing is not bijective on " + f.name());
  const auto check = [&](const FieldElem& a, const FieldElem& b) {
    ++res.cases;
    const std::string at = " at (" + a.str() + "," + b.str() + ")";
    if ((a + b).pow(3) != a.pow(3) + b.pow(3)) res.fail("cubing not additive" + at);
    if ((a * b).pow(3) != a.pow(3) * b.pow(3)) res.fail("cubing not multiplicative" + at);
    if (f.cbrt(a).pow(3) != a || f.cbrt(a.pow(3)) != a) res.fail("cbrt is not the inverse of cubing" + at);
  };
  if (random == 0) {
    for (const auto& a : els)
      for (const auto& b : els) check(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    for (int i = 0; i < random; ++i) check(els[pick(rng)], els[pick(rng)]);
  }
  return res;
}

Result cayley_hamilton(const Field& f, int random, std::uint64_t seed) {
  Result res;
  const auto check = [&](const Mat& m) {
    ++res.cases;
    const CharMinPoly cm = char_min_poly(m);
    if (!poly_eval_mat(cm.charpoly, m).is_zero()) res.fail("chi(A) != 0 for A = " + m.str());
    if (!poly_eval_mat(cm.minpoly, m).is_zero()) res.fail("mu(A) != 0 for A = " + m.str());
    if (poly_degree(cm.charpoly) != m.rows()) res.fail("deg chi != n for A = " + m.str());
    if (!poly_divmod(cm.charpoly, cm.minpoly).second.empty()) res.fail("mu does not divide chi for A = " + m.str());
  };
  if (random > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(1, 9);
    for (int i = 0; i < random; ++i) check(random_mat(f, size(rng), rng));
    return res;
  }
  const auto els = f.elements();
  for (const auto& a : els)
    for (const auto& b : els)
      for (const auto& c : els)
        for (const auto& d : els) check(Mat::from_elems(f, {{a, b}, {c, d}}));
  const auto mods = module_list(f);
  for (const auto& p : mods) {
    const Rep r = build(p, f);
    for (const Mat& m : {r.xminus, r.h, r.xplus, r.xplus * r.xminus}) check(m);
  }
  if (f.degree() == 1)
    for (const auto& [l, r] : all_pairs(f)) {
      const Rep t = tensor(build(l, f), build(r, f));
      for (const Mat& m : {t.xminus, t.h, t.xplus, t.xplus * t.xminus}) check(m);
    }
  return res;
}

namespace {

void check_weight_shift(const Rep& r, const std::string& who, Result& res) {
  ++res.cases;
  const Field& f = r.field();
  const WeightDecomp ws = weight_spaces(r);
  std::map<Code, const Subspace*> by_weight;
  int total = 0;
  for (const auto& w : ws) {
    by_weight[w.weight.code()] = &w.space;
    total += w.space.dim();
  }
  if (total != r.dim()) res.fail(who + ": weight spaces do not span");
  const Subspace zero(f, r.dim());
  const FieldElem two = f.from_int(2);
  for (const auto& w : ws) {
    const auto target = [&](const FieldElem& rho) -> const Subspace& {
      const auto it = by_weight.find(rho.code());
      return it == by_weight.end() ? zero : *it->second;
    };
    const Subspace& up = target(w.weight + two);
    const Subspace& down = target(w.weight - two);
    for (const auto& v : w.space.basis()) {
      if (!up.contains(r.xplus.apply(v))) res.fail(who + ": X+ leaves V_{rho+2} at rho = " + w.weight.str());
      if (!down.contains(r.xminus.apply(v))) res.fail(who + ": X- leaves V_{rho-2} at rho = " + w.weight.str());
    }
  }
}

void check_dimensions(const ModuleParams& l, const ModuleParams& r, const Field& f, Result& res, bool* engine_ok) {
  const std::string who = l.str() + " (x) " + r.str();
  const Rep t = tensor(build(l, f), build(r, f));
  *engine_ok = false;
  Decomposition d;
  try {
    d = decompose_lifting(t);
  } catch (const Error&) {
    return;
  }
  *engine_ok = true;
  ++res.cases;
  if (d.descriptor.dim() != t.dim()) res.fail(who + ": engine descriptor has the wrong dimension");
  int leaf_dims = 0;
  for (const auto& c : d.descriptor.leaves()) leaf_dims += c.dim();
  if (leaf_dims != t.dim()) res.fail(who + ": engine leaves do not add up");
  const Field& g = gf(d.field_degree);
  if (composition_factors(t.lifted(g)) != d.descriptor.leaves())
    res.fail(who + ": engine leaves are not the composition factors");
  const Prediction p = predict(l, r, f);
  if (p.descriptor && p.descriptor->dim() != t.dim()) res.fail(who + ": oracle descriptor has the wrong dimension");
}

}  // namespace

Result weight_shift(const Field& f, int random, std::uint64_t seed) {
  Result res;
  if (random > 0) {
    for (const auto& [l, r] : sample_pairs(f, random, seed))
      check_weight_shift(tensor(build(l, f), build(r, f)), l.str() + " (x) " + r.str(), res);
    return res;
  }
  for (const auto& p : module_list(f)) check_weight_shift(build(p, f), p.str(), res);
  if (f.degree() == 1)
    for (const auto& [l, r] : all_pairs(f)) check_weight_shift(tensor(build(l, f), build(r, f)), l.str() + " (x) " + r.str(), res);
  return res;
}

Result dimension_conservation(const Field& f, int random, std::uint64_t seed) {
  Result res;
  bool ok = false;
  if (random == 0) {
    for (const auto& [l, r] : all_pairs(f)) {
      check_dimensions(l, r, f, res, &ok);
      if (!ok) res.fail(l.str() + " (x) " + r.str() + ": no engine descriptor");
    }
    return res;
  }
  // Pairs whose roots lie beyond the extension cap have no descriptor; keep
  // drawing until enough of them do.
  std::uint64_t batch_seed = seed;
  for (int round = 0; round < 50 && res.cases < random; ++round)
    for (const auto& [l, r] : sample_pairs(f, random, batch_seed++)) {
      if (res.cases >= random) break;
      check_dimensions(l, r, f, res, &ok);
    }
  return res;
}

Result dimension_conservation(const std::vector<PairRecord>& records) {
  Result res;
  for (const auto& r : records) {
    ++res.cases;
    const int n = r.left.dim() * r.right.dim();
    const std::string who = r.left.str() + " (x) " + r.right.str();
    if (r.engine && r.engine->dim() != n) res.fail(who + ": engine descriptor has the wrong dimension");
    if (r.oracle && r.oracle->dim() != n) res.fail(who + ": oracle descriptor has the wrong dimension");
  }
  return res;
}

}  // namespace sl2c3::checks
