#include "sl2c3/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sl2c3/tensor.hpp"

namespace sl2c3 {

namespace {

std::vector<const Mat*> generators(const Rep& r) { return {&r.xminus, &r.h, &r.xplus}; }

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

// Degree of the smallest field (within the cap) over which every polynomial
// splits; the cap plus one when there is none.
int common_splitting_degree(const std::vector<Poly>& polys, int base) {
  const int cap = max_extension_degree();
  int need = base;
  for (const auto& p : polys) {
    if (poly_roots(p).cofactor_degree == 0) continue;
    const int k = splitting_degree(p, cap);
    if (k == 0) return cap + 1;
    need = lcm_int(need, k);
  }
  return need;
}

Vec combine(const Field& f, const std::vector<Vec>& basis, const Vec& coords) {
  Vec v(basis.empty() ? 0 : basis[0].size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coords[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(coords[i], basis[i][j]));
  }
  return v;
}

Subspace to_ambient(const Field& f, int n, const Subspace& w, const Subspace& local) {
  std::vector<Vec> vs;
  for (const auto& c : local.basis()) vs.push_back(combine(f, w.basis(), c));
  return Subspace::span(f, n, vs);
}

Mat scalar(const Field& f, int n, const FieldElem& s) { return Mat::identity(f, n).scaled(s); }

}  // namespace

Subspace spin(const Rep& r, const Vec& v) {
  if (std::all_of(v.begin(), v.end(), [](Code c) { return c == 0; })) throw Error("spin of the zero vector");
  return spin(r, Subspace::span(r.field(), r.dim(), {v}));
}

Subspace spin(const Rep& r, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    std::vector<Vec> extra;
    for (const auto& v : cur.basis())
      for (const Mat* g : generators(r)) extra.push_back(g->apply(v));
    std::vector<Vec> all = cur.basis();
    all.insert(all.end(), extra.begin(), extra.end());
    Subspace next = Subspace::span(r.field(), r.dim(), all);
    if (next.dim() == cur.dim()) return next;
    cur = next;
  }
}

std::vector<Subspace> simple_generator_spaces(const Rep& r) {
  const Field& f = r.field();
  const int n = r.dim();
  const Mat xpxm = r.xplus * r.xminus;
  const Mat xm3 = r.xminus.pow(3);
  const Mat xp3 = r.xplus.pow(3);
  std::vector<Subspace> out;
  for (const auto& ws : weight_spaces(r)) {
    const Subspace& w = ws.space;
    const Mat p = restrict_to(xpxm, w);
    const Mat bm = restrict_to(xm3, w);
    const Mat am = restrict_to(xp3, w);
    const int need = common_splitting_degree({charpoly(p), charpoly(bm), charpoly(am)}, f.degree());
    if (need != f.degree())
      throw FieldTooSmall(need, "eigenvalues on the weight space " + ws.weight.str() + " lie outside " + f.name());
    for (const auto& pe : eigenspaces(p)) {
      for (const auto& be : eigenspaces(bm)) {
        const Subspace e = pe.space.intersect(be.space);
        if (e.dim() == 0) continue;
        if (!be.value.is_zero()) {
          out.push_back(to_ambient(f, n, w, e));
          continue;
        }
        for (const auto& ae : eigenspaces(am)) {
          if (ae.value.is_zero()) continue;
          const Subspace e2 = e.intersect(ae.space);
          if (e2.dim() > 0) out.push_back(to_ambient(f, n, w, e2));
        }
      }
    }
    // Highest weight vectors that generate the irreducible of that weight.
    int len = 3;
    if (ws.weight == f.zero()) len = 1;
    if (ws.weight == f.one()) len = 2;
    const Subspace k = joint_kernel({r.xplus, r.xminus.pow(len)}).intersect(w);
    if (k.dim() > 0) out.push_back(k);
  }
  return out;
}

Subspace socle(const Rep& r) {
  Subspace s(r.field(), r.dim());
  for (const auto& g : simple_generator_spaces(r)) s = s.plus(g);
  if (s.dim() == 0) return s;
  return spin(r, s);
}

Rep sub_rep(const Rep& r, const Subspace& s) {
  return Rep{restrict_to(r.xminus, s), restrict_to(r.h, s), restrict_to(r.xplus, s), std::nullopt};
}

Rep quotient_rep(const Rep& r, const Subspace& s) {
  for (const auto& v : s.basis())
    for (const Mat* g : generators(r))
      if (!s.contains(g->apply(v))) throw Error("quotient by a non-invariant subspace");
  return Rep{quotient_action(r.xminus, s), quotient_action(r.h, s), quotient_action(r.xplus, s), std::nullopt};
}

namespace {

std::vector<Mat> endomorphisms(const Rep& r) {
  const std::vector<Mat> g{r.xminus, r.h, r.xplus};
  return intertwiner_space(g, g);
}

// Primary components of phi when there are at least two; nullopt when phi
// has a single eigenvalue in the field.
std::optional<std::vector<Subspace>> primary_split(const Mat& phi) {
  const Field& f = phi.field();
  const int n = phi.rows();
  const Poly cp = charpoly(phi);
  const PolyRoots roots = poly_roots(cp);
  std::vector<Subspace> parts;
  Poly linear{f.one()};
  for (const auto& rm : roots.roots) {
    parts.push_back(kernel((phi - scalar(f, n, rm.root)).pow(rm.mult)));
    linear = poly_mul(linear, poly_linear_power(rm.root, rm.mult));
  }
  if (roots.cofactor_degree > 0) {
    if (roots.roots.empty()) {
      const int need = common_splitting_degree({cp}, f.degree());
      throw FieldTooSmall(need, "endomorphism eigenvalues lie outside " + f.name());
    }
    const Poly cof = poly_divmod(cp, linear).first;
    parts.push_back(kernel(poly_eval_mat(cof, phi).pow(n)));
  }
  if (parts.size() < 2) return std::nullopt;
  return parts;
}

Vec flatten(const Mat& m) {
  Vec v;
  v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.code(i, j));
  return v;
}

Mat unflatten(const Field& f, int n, const Vec& v) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set_code(i, j, v[i * n + j]);
  return m;
}

// True when span(ns) is closed under multiplication and nilpotent.
bool nilpotent_algebra(const Field& f, int n, const std::vector<Mat>& ns) {
  std::vector<Vec> flat;
  for (const auto& m : ns) flat.push_back(flatten(m));
  const Subspace span = Subspace::span(f, n * n, flat);
  for (const auto& a : ns)
    for (const auto& b : ns)
      if (!span.contains(flatten(a * b))) return false;
  Subspace power = span;
  for (int step = 0; step <= n * n && power.dim() > 0; ++step) {
    std::vector<Vec> prods;
    for (const auto& x : power.basis())
      for (const auto& y : ns) prods.push_back(flatten(unflatten(f, n, x) * y));
    const Subspace next = Subspace::span(f, n * n, prods);
    if (next.dim() == power.dim()) return false;
    power = next;
  }
  return power.dim() == 0;
}

std::optional<std::vector<Subspace>> find_split(const Rep& r) {
  const Field& f = r.field();
  const int n = r.dim();
  const std::vector<Mat> endo = endomorphisms(r);
  if (endo.size() <= 1) return std::nullopt;
  std::vector<Mat> nil;
  for (const auto& phi : endo) {
    if (auto parts = primary_split(phi)) return parts;
    const PolyRoots roots = poly_roots(charpoly(phi));
    nil.push_back(phi - scalar(f, n, roots.roots.at(0).root));
  }
  if (nilpotent_algebra(f, n, nil)) return std::nullopt;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<int> pick(0, f.order() - 1);
  for (int attempt = 0; attempt < 500; ++attempt) {
    Mat phi(f, n, n);
    for (const auto& e : endo) phi = phi + e.scaled(f.from_code(static_cast<Code>(pick(rng))));
    if (auto parts = primary_split(phi)) return parts;
  }
  throw Error("endomorphism algebra is not local but no splitting element was found");
}

void split_into(const Rep& r, const Mat& embed, std::vector<Subspace>& out) {
  const auto parts = find_split(r);
  if (!parts) {
    std::vector<Vec> cols;
    for (int j = 0; j < embed.cols(); ++j) cols.push_back(embed.column(j));
    out.push_back(Subspace::span(r.field(), embed.rows(), cols));
    return;
  }
  for (const auto& w : *parts) {
    const Mat basis = Mat::from_columns(r.field(), r.dim(), w.basis());
    split_into(sub_rep(r, w), embed * basis, out);
  }
}

bool is_simple(const Rep& r) {
  if (r.dim() == 1) return true;
  return socle(r).dim() == r.dim() && !find_split(r).has_value();
}

}  // namespace

std::vector<Subspace> indecomposable_summands(const Rep& r) {
  std::vector<Subspace> out;
  if (r.dim() == 0) return out;
  split_into(r, Mat::identity(r.field(), r.dim()), out);
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return a.basis() < b.basis(); });
  return out;
}

std::vector<CanonicalClass> semisimple_constituents(const Rep& r) {
  std::vector<CanonicalClass> out;
  for (const auto& w : indecomposable_summands(r)) {
    const Rep s = sub_rep(r, w);
    if (!is_simple(s)) throw Error("module is not semisimple");
    out.push_back(recover_params(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<CanonicalClass>> socle_layers(const Rep& r) {
  std::vector<std::vector<CanonicalClass>> layers;
  Rep cur = r;
  while (cur.dim() > 0) {
    const Subspace s = socle(cur);
    if (s.dim() == 0) throw Error("module without irreducible submodules");
    layers.push_back(semisimple_constituents(sub_rep(cur, s)));
    cur = quotient_rep(cur, s);
  }
  return layers;
}

std::vector<CanonicalClass> composition_factors(const Rep& r) {
  std::vector<CanonicalClass> out;
  for (const auto& layer : socle_layers(r)) out.insert(out.end(), layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Socle series 0 = F_0 < F_1 < ... < F_m = V in the coordinates of r.
std::vector<Subspace> socle_series(const Rep& r) {
  std::vector<Subspace> out{Subspace(r.field(), r.dim())};
  while (out.back().dim() < r.dim()) {
    const Subspace& prev = out.back();
    const Subspace s = socle(quotient_rep(r, prev));
    if (s.dim() == 0) throw Error("module without irreducible submodules");
    const auto pos = quotient_positions(prev);
    std::vector<Vec> lifted;
    for (const auto& q : s.basis()) {
      Vec v(r.dim(), 0);
      for (std::size_t i = 0; i < pos.size(); ++i) v[pos[i]] = q[i];
      lifted.push_back(v);
    }
    Subspace next = prev;
    for (const auto& v : lifted) next = next.plus(v);
    out.push_back(next);
  }
  return out;
}

// Coordinates of y in the independent vectors bs, or nullopt when y is not
// in their span.
std::optional<std::vector<Code>> coords_in(const Field& f, const std::vector<Vec>& bs, const Vec& y) {
  const int n = static_cast<int>(y.size()), m = static_cast<int>(bs.size());
  Mat a(f, n, m + 1);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) a.set_code(i, j, bs[j][i]);
  for (int i = 0; i < n; ++i) a.set_code(i, m, y[i]);
  const auto piv = rref(a);
  if (!piv.empty() && piv.back() == m) return std::nullopt;
  std::vector<Code> c(m, 0);
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = a.code(static_cast<int>(r), m);
  return c;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Code c) { return c == 0; });
}

// One socle layer F_k / F_{k-1} of a module whose constituents are 1 and 2.
// The 1-nodes are weight-0 vectors and the 2-nodes are given by their
// weight-1 (highest) vectors; all vectors are reduced modulo F_{k-1}.
struct Layer {
  Subspace below;      // F_{k-1}
  Subspace ones;       // multiplicity space of 1s
  Subspace twos;       // multiplicity space of 2s (highest vectors)
  std::vector<Vec> one_nodes, two_nodes;
  int first_one = 0, first_two = 0;  // node indices in the glue
};

Subspace reduced_span(const Subspace& below, const std::vector<Vec>& vs) {
  std::vector<Vec> r;
  for (const auto& v : vs) r.push_back(below.reduce(v));
  return Subspace::span(below.field(), below.ambient(), r);
}

// Picks a basis of the multiplicity space m out of the distinguished lines
// (in order), completing it from the echelon basis when they do not suffice.
std::vector<Vec> node_basis(const Subspace& m, const std::vector<Subspace>& lines) {
  std::vector<Vec> out;
  Subspace got(m.field(), m.ambient());
  for (const auto& l : lines) {
    if (l.dim() != 1 || got.contains(l)) continue;
    out.push_back(l.basis()[0]);
    got = got.plus(l);
  }
  for (const auto& v : m.basis()) {
    if (static_cast<int>(out.size()) == m.dim()) break;
    if (got.contains(v)) continue;
    out.push_back(v);
    got = got.plus(v);
  }
  return out;
}

// The subspace of m whose image under op, reduced modulo below, vanishes.
Subspace kernel_within(const Subspace& m, const Mat& op, const Subspace& below) {
  const Field& f = m.field();
  const int d = m.dim();
  if (d == 0) return m;
  Mat a(f, m.ambient(), d);
  for (int j = 0; j < d; ++j) {
    const Vec img = below.reduce(op.apply(m.basis()[j]));
    for (int i = 0; i < m.ambient(); ++i) a.set_code(i, j, img[i]);
  }
  const Subspace ker = kernel(a);
  std::vector<Vec> out;
  for (const auto& c : ker.basis()) out.push_back(combine(f, m.basis(), c));
  return Subspace::span(f, m.ambient(), out);
}

Descriptor describe_glue(const Rep& u) {
  const Field& f = u.field();
  const int n = u.dim();
  const auto series = socle_series(u);
  const int m = static_cast<int>(series.size()) - 1;
  const WeightDecomp ws = weight_spaces(u);
  const auto weight_part = [&](const FieldElem& rho) {
    for (const auto& w : ws)
      if (w.weight == rho) return w.space;
    return Subspace(f, n);
  };
  const Subspace v0 = weight_part(f.zero()), v1 = weight_part(f.one());
  const Mat& xm = u.xminus;
  const Mat& xp = u.xplus;
  const Mat xm2 = xm * xm, xp2 = xp * xp;

  std::vector<Layer> layers(m);
  for (int k = 0; k < m; ++k) {
    Layer& l = layers[k];
    l.below = series[k];
    l.ones = reduced_span(l.below, series[k + 1].intersect(v0).basis());
    l.twos = reduced_span(l.below, series[k + 1].intersect(v1).basis());
  }
  // Node bases, chosen from the top down so that images from the layer above
  // are available: lines hit by X- and by X+ first, then kernels of the maps
  // to the layer below.
  for (int k = m - 1; k >= 0; --k) {
    Layer& l = layers[k];
    std::vector<Subspace> one_lines, two_lines;
    if (k + 1 < m) {
      const Layer& up = layers[k + 1];
      const auto images = [&](const Subspace& src, const Mat& op) {
        std::vector<Vec> vs;
        for (const auto& v : src.basis()) vs.push_back(op.apply(v));
        return reduced_span(l.below, vs);
      };
      one_lines.push_back(images(up.twos, xm2));
      one_lines.push_back(images(up.twos, xp));
      two_lines.push_back(images(up.ones, xm));
      two_lines.push_back(images(up.ones, xp2));
    }
    if (k > 0) {
      const Subspace& low = layers[k - 1].below;
      one_lines.push_back(kernel_within(l.ones, xm, low));
      one_lines.push_back(kernel_within(l.ones, xp, low));
      two_lines.push_back(kernel_within(l.twos, xm2, low));
      two_lines.push_back(kernel_within(l.twos, xp, low));
    }
    l.one_nodes = node_basis(l.ones, one_lines);
    l.two_nodes = node_basis(l.twos, two_lines);
  }

  std::vector<CanonicalClass> nodes;
  for (auto& l : layers) {
    l.first_one = static_cast<int>(nodes.size());
    for (std::size_t i = 0; i < l.one_nodes.size(); ++i) nodes.push_back(CanonicalClass::one());
    l.first_two = static_cast<int>(nodes.size());
    for (std::size_t i = 0; i < l.two_nodes.size(); ++i) nodes.push_back(CanonicalClass::two());
  }

  std::vector<GlueEdge> edges;
  const auto connect = [&](int from, const Vec& image, const std::vector<Vec>& targets, int first, Action a,
                           const Subspace& below) {
    const Vec y = below.reduce(image);
    if (is_zero_vec(y)) return;
    const auto c = coords_in(f, targets, y);
    if (!c) throw Error("glue image leaves the layer below");
    for (std::size_t j = 0; j < c->size(); ++j)
      if ((*c)[j] != 0) edges.push_back({from, first + static_cast<int>(j), a});
  };
  for (int k = 1; k < m; ++k) {
    const Layer& l = layers[k];
    const Layer& d = layers[k - 1];
    std::vector<Vec> lows;
    for (const auto& h : d.two_nodes) lows.push_back(d.below.reduce(xm.apply(h)));
    for (std::size_t i = 0; i < l.one_nodes.size(); ++i) {
      const int from = l.first_one + static_cast<int>(i);
      connect(from, xm.apply(l.one_nodes[i]), d.two_nodes, d.first_two, Action::XMinus, d.below);
      connect(from, xp.apply(l.one_nodes[i]), lows, d.first_two, Action::XPlus, d.below);
    }
    for (std::size_t i = 0; i < l.two_nodes.size(); ++i) {
      const int from = l.first_two + static_cast<int>(i);
      connect(from, xm2.apply(l.two_nodes[i]), d.one_nodes, d.first_one, Action::XMinus, d.below);
      connect(from, xp.apply(l.two_nodes[i]), d.one_nodes, d.first_one, Action::XPlus, d.below);
    }
  }
  return Descriptor::glue(nodes, edges);
}

Descriptor describe_indecomposable(const Rep& u) {
  if (is_simple(u)) return Descriptor::leaf(recover_params(u));
  const auto factors = composition_factors(u);
  if (std::all_of(factors.begin(), factors.end(), [](const CanonicalClass& c) { return c.dim() <= 2; }))
    return describe_glue(u);
  const Subspace s = socle(u);
  std::vector<Descriptor> bottom;
  for (const auto& c : semisimple_constituents(sub_rep(u, s))) bottom.push_back(Descriptor::leaf(c));
  return Descriptor::semi(decompose(quotient_rep(u, s)), Descriptor::sum(bottom));
}

}  // namespace

Descriptor decompose(const Rep& r) {
  std::vector<Descriptor> parts;
  for (const auto& w : indecomposable_summands(r)) parts.push_back(describe_indecomposable(sub_rep(r, w)));
  return Descriptor::sum(parts).normalized();
}

Decomposition decompose_lifting(const Rep& r) {
  Rep cur = r;
  for (;;) {
    try {
      return {decompose(cur), cur.field().degree()};
    } catch (const FieldTooSmall& e) {
      const int need = e.required_degree();
      if (need > max_extension_degree() || need <= cur.field().degree())
        throw Error(std::string(e.what()) + "; no extension of degree at most " +
                    std::to_string(max_extension_degree()) + " contains them");
      cur = cur.lifted(make_field(need));
    }
  }
}

}  // namespace sl2c3
