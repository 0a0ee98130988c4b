#include "sl2c3/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sl2c3 {

namespace {

void require_same_field(const Field* a, const Field* b) {
  if (a != b) throw Error("matrices over different fields");
}

}  // namespace

Mat::Mat(const Field& f, int rows, int cols)
    : f_(&f), r_(rows), c_(cols), d_(static_cast<std::size_t>(rows) * cols, 0) {}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.d_[i * n + i] = 1;
  return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix literal");
    for (int j = 0; j < c; ++j) m.set(i, j, f.from_int(rows[i][j]));
  }
  return m;
}

Mat Mat::from_elems(const Field& f, const std::vector<std::vector<FieldElem>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(f, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix literal");
    for (int j = 0; j < c; ++j) {
      if (rows[i][j].field_ptr() != &f) throw Error("matrix entry from a different field");
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

Mat Mat::from_columns(const Field& f, int rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, static_cast<int>(cols.size()));
  for (int j = 0; j < m.c_; ++j) {
    if (static_cast<int>(cols[j].size()) != rows) throw Error("column length mismatch");
    for (int i = 0; i < rows; ++i) m.d_[i * m.c_ + j] = cols[j][i];
  }
  return m;
}

Vec Mat::column(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = d_[i * c_ + j];
  return v;
}

Vec Mat::row(int i) const { return Vec(d_.begin() + i * c_, d_.begin() + (i + 1) * c_); }

Mat Mat::operator+(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (r_ != o.r_ || c_ != o.c_) throw Error("matrix shape mismatch in +");
  Mat m(*f_, r_, c_);
  for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->add(d_[i], o.d_[i]);
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (r_ != o.r_ || c_ != o.c_) throw Error("matrix shape mismatch in -");
  Mat m(*f_, r_, c_);
  for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->sub(d_[i], o.d_[i]);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  require_same_field(f_, o.f_);
  if (c_ != o.r_) throw Error("matrix shape mismatch in *");
  Mat m(*f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Code a = d_[i * c_ + k];
      if (a == 0) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Code b = o.d_[k * o.c_ + j];
        if (b == 0) continue;
        Code& t = m.d_[i * o.c_ + j];
        t = f_->add(t, f_->mul(a, b));
      }
    }
  return m;
}

Mat Mat::operator-() const {
  Mat m(*f_, r_, c_);
  for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->neg(d_[i]);
  return m;
}

Mat Mat::scaled(const FieldElem& s) const {
  Mat m(*f_, r_, c_);
  for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = f_->mul(d_[i], s.code());
  return m;
}

Mat Mat::transpose() const {
  Mat m(*f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.d_[j * r_ + i] = d_[i * c_ + j];
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw Error("vector length mismatch");
  Vec out(r_, 0);
  for (int i = 0; i < r_; ++i) {
    Code acc = 0;
    for (int j = 0; j < c_; ++j) acc = f_->add(acc, f_->mul(d_[i * c_ + j], v[j]));
    out[i] = acc;
  }
  return out;
}

Mat Mat::pow(int e) const {
  if (r_ != c_) throw Error("pow of a non-square matrix");
  Mat result = identity(*f_, r_);
  Mat base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Mat Mat::lifted(const Field& target) const {
  Mat m(target, r_, c_);
  for (std::size_t i = 0; i < d_.size(); ++i) m.d_[i] = lift(FieldElem(f_, d_[i]), target).code();
  return m;
}

bool Mat::operator==(const Mat& o) const {
  return f_ == o.f_ && r_ == o.r_ && c_ == o.c_ && d_ == o.d_;
}

bool Mat::is_zero() const {
  return std::all_of(d_.begin(), d_.end(), [](Code c) { return c == 0; });
}

std::optional<FieldElem> Mat::scalar_value() const {
  if (r_ != c_) return std::nullopt;
  const Code s = r_ == 0 ? 0 : d_[0];
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (d_[i * c_ + j] != (i == j ? s : 0)) return std::nullopt;
  return FieldElem(f_, s);
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < c_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

Mat kron(const Mat& a, const Mat& b) {
  require_same_field(a.field_ptr(), b.field_ptr());
  const Field& f = a.field();
  Mat m(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Code x = a.code(i, j);
      if (x == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          m.set_code(i * b.rows() + k, j * b.cols() + l, f.mul(x, b.code(k, l)));
    }
  return m;
}

std::vector<int> rref(Mat& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.code(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) {
        const Code t = m.code(p, j);
        m.set_code(p, j, m.code(row, j));
        m.set_code(row, j, t);
      }
    const Code inv = f.inv_code(m.code(row, col));
    for (int j = 0; j < m.cols(); ++j) m.set_code(row, j, f.mul(m.code(row, j), inv));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Code c = m.code(i, col);
      if (c == 0) continue;
      const Code nc = f.neg(c);
      for (int j = 0; j < m.cols(); ++j)
        m.set_code(i, j, f.add(m.code(i, j), f.mul(nc, m.code(row, j))));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const Mat& m) {
  Mat t = m;
  return static_cast<int>(rref(t).size());
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const int n = m.rows();
  const Field& f = m.field();
  Mat aug(f, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.set_code(i, j, m.code(i, j));
    aug.set_code(i, n + i, 1);
  }
  const auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  Mat inv(f, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.set_code(i, j, aug.code(i, n + j));
  return inv;
}

FieldElem determinant(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const Field& f = m.field();
  Mat a = m;
  const int n = a.rows();
  FieldElem det = f.one();
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (a.code(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return f.zero();
    if (p != col) {
      for (int j = 0; j < n; ++j) {
        const Code t = a.code(p, j);
        a.set_code(p, j, a.code(col, j));
        a.set_code(col, j, t);
      }
      det = -det;
    }
    const FieldElem piv = a.at(col, col);
    det *= piv;
    const Code inv = f.inv_code(piv.code());
    for (int i = col + 1; i < n; ++i) {
      const Code c = f.mul(a.code(i, col), inv);
      if (c == 0) continue;
      const Code nc = f.neg(c);
      for (int j = col; j < n; ++j)
        a.set_code(i, j, f.add(a.code(i, j), f.mul(nc, a.code(col, j))));
    }
  }
  return det;
}

// ---------------------------------------------------------------- Subspace

Subspace::Subspace(const Field& f, int n) : f_(&f), n_(n) {}

Subspace Subspace::span(const Field& f, int n, const std::vector<Vec>& vs) {
  Subspace s(f, n);
  if (vs.empty()) return s;
  Mat m(f, static_cast<int>(vs.size()), n);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(vs[i].size()) != n) throw Error("vector length mismatch in span");
    for (int j = 0; j < n; ++j) m.set_code(i, j, vs[i][j]);
  }
  s.pivots_ = rref(m);
  for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.basis_.push_back(m.row(static_cast<int>(i)));
  return s;
}

Subspace Subspace::full(const Field& f, int n) {
  Subspace s(f, n);
  for (int i = 0; i < n; ++i) {
    Vec v(n, 0);
    v[i] = 1;
    s.basis_.push_back(v);
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error("vector length mismatch in reduce");
  Vec r = v;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const Code c = r[pivots_[b]];
    if (c == 0) continue;
    const Code nc = f_->neg(c);
    for (int j = 0; j < n_; ++j) r[j] = f_->add(r[j], f_->mul(nc, basis_[b][j]));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  const Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Code c) { return c == 0; });
}

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(), [&](const Vec& v) { return contains(v); });
}

std::vector<Code> Subspace::coords(const Vec& v) const {
  if (!contains(v)) throw Error("vector not in subspace");
  std::vector<Code> c(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) c[b] = v[pivots_[b]];
  return c;
}

Subspace Subspace::plus(const Subspace& o) const {
  std::vector<Vec> vs = basis_;
  vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
  return span(*f_, n_, vs);
}

Subspace Subspace::plus(const Vec& v) const {
  std::vector<Vec> vs = basis_;
  vs.push_back(v);
  return span(*f_, n_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
  const int a = dim();
  if (a == 0 || o.dim() == 0) return Subspace(*f_, n_);
  std::vector<Vec> cols = basis_;
  for (const auto& w : o.basis_) {
    Vec nw(n_);
    for (int j = 0; j < n_; ++j) nw[j] = f_->neg(w[j]);
    cols.push_back(nw);
  }
  const Subspace k = kernel(Mat::from_columns(*f_, n_, cols));
  std::vector<Vec> out;
  for (const auto& sol : k.basis()) {
    Vec v(n_, 0);
    for (int i = 0; i < a; ++i)
      if (sol[i] != 0)
        for (int j = 0; j < n_; ++j) v[j] = f_->add(v[j], f_->mul(sol[i], basis_[i][j]));
    out.push_back(v);
  }
  return span(*f_, n_, out);
}

bool Subspace::operator==(const Subspace& o) const {
  return f_ == o.f_ && n_ == o.n_ && basis_ == o.basis_;
}

Subspace kernel(const Mat& m) {
  const Field& f = m.field();
  Mat t = m;
  const auto piv = rref(t);
  std::vector<bool> is_piv(m.cols(), false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Vec> vs;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = f.neg(t.code(static_cast<int>(r), free));
    vs.push_back(v);
  }
  return Subspace::span(f, m.cols(), vs);
}

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

Subspace joint_kernel(const std::vector<Mat>& ms) {
  if (ms.empty()) throw Error("joint_kernel of no matrices");
  const Field& f = ms[0].field();
  const int n = ms[0].cols();
  int rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != n) throw Error("column count mismatch in joint_kernel");
    rows += m.rows();
  }
  Mat stacked(f, rows, n);
  int r = 0;
  for (const auto& m : ms)
    for (int i = 0; i < m.rows(); ++i, ++r)
      for (int j = 0; j < n; ++j) stacked.set_code(r, j, m.code(i, j));
  return kernel(stacked);
}

// ------------------------------------------------------------ polynomials

Poly charpoly(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("charpoly of a non-square matrix");
  const Field& f = m.field();
  const int n = m.rows();
  Mat h = m;
  // Similarity reduction to upper Hessenberg form.
  for (int j = 0; j + 2 < n; ++j) {
    int p = -1;
    for (int i = j + 1; i < n; ++i)
      if (h.code(i, j) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != j + 1) {
      for (int c = 0; c < n; ++c) {
        const Code t = h.code(p, c);
        h.set_code(p, c, h.code(j + 1, c));
        h.set_code(j + 1, c, t);
      }
      for (int r = 0; r < n; ++r) {
        const Code t = h.code(r, p);
        h.set_code(r, p, h.code(r, j + 1));
        h.set_code(r, j + 1, t);
      }
    }
    const FieldElem piv = h.at(j + 1, j);
    for (int i = j + 2; i < n; ++i) {
      const FieldElem t = h.at(i, j) / piv;
      if (t.is_zero()) continue;
      for (int c = 0; c < n; ++c) h.set(i, c, h.at(i, c) - t * h.at(j + 1, c));
      for (int r = 0; r < n; ++r) h.set(r, j + 1, h.at(r, j + 1) + t * h.at(r, i));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly{f.one()};
  for (int k = 1; k <= n; ++k) {
    p[k] = poly_mul(Poly{-h.at(k - 1, k - 1), f.one()}, p[k - 1]);
    FieldElem t = f.one();
    for (int i = 1; i < k; ++i) {
      t *= h.at(k - i, k - i - 1);
      const FieldElem coef = h.at(k - i - 1, k - 1) * t;
      if (coef.is_zero()) continue;
      Poly term = p[k - i - 1];
      for (auto& c : term) c *= coef;
      p[k] = poly_sub(p[k], term);
    }
  }
  return p[n];
}

Poly minpoly(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("minpoly of a non-square matrix");
  const Field& f = m.field();
  const int n = m.rows();
  const int nn = n * n;
  // Find the first power of m that is a combination of the lower ones.
  std::vector<Vec> powers;
  Mat cur = Mat::identity(f, n);
  for (int d = 0; d <= n; ++d) {
    Vec flat(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[i * n + j] = cur.code(i, j);
    std::vector<Vec> cols = powers;
    cols.push_back(flat);
    const Subspace k = kernel(Mat::from_columns(f, nn, cols));
    if (k.dim() > 0) {
      // The kernel is one-dimensional with a nonzero last entry.
      const Vec& rel = k.basis()[0];
      Poly p;
      for (Code c : rel) p.push_back(FieldElem(&f, c));
      return poly_monic(p);
    }
    powers.push_back(flat);
    cur = cur * m;
  }
  throw Error("minimal polynomial search exceeded the matrix size");
}

CharMinPoly char_min_poly(const Mat& m) { return {charpoly(m), minpoly(m)}; }

Mat poly_eval_mat(const Poly& p, const Mat& m) {
  const Field& f = m.field();
  Mat acc(f, m.rows(), m.cols());
  const Mat id = Mat::identity(f, m.rows());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * m + id.scaled(*it);
  return acc;
}

std::vector<Eigenspace> eigenspaces(const Mat& m) {
  const Field& f = m.field();
  std::vector<Eigenspace> out;
  const PolyRoots roots = poly_roots(charpoly(m));
  for (const auto& r : roots.roots)
    out.push_back({r.root, kernel(m - Mat::identity(f, m.rows()).scaled(r.root))});
  return out;
}

std::vector<Eigenspace> generalized_eigenspaces(const Mat& m) {
  const Field& f = m.field();
  std::vector<Eigenspace> out;
  const PolyRoots roots = poly_roots(charpoly(m));
  for (const auto& r : roots.roots) {
    const Mat shifted = m - Mat::identity(f, m.rows()).scaled(r.root);
    out.push_back({r.root, kernel(shifted.pow(r.mult))});
  }
  return out;
}

Mat restrict_to(const Mat& m, const Subspace& u) {
  const int d = u.dim();
  Mat r(m.field(), d, d);
  for (int j = 0; j < d; ++j) {
    const Vec img = m.apply(u.basis()[j]);
    if (!u.contains(img)) throw Error("subspace is not invariant");
    const auto c = u.coords(img);
    for (int i = 0; i < d; ++i) r.set_code(i, j, c[i]);
  }
  return r;
}

std::vector<int> quotient_positions(const Subspace& u) {
  std::vector<bool> piv(u.ambient(), false);
  for (int p : u.pivots()) piv[p] = true;
  std::vector<int> out;
  for (int i = 0; i < u.ambient(); ++i)
    if (!piv[i]) out.push_back(i);
  return out;
}

Mat quotient_action(const Mat& m, const Subspace& u) {
  const auto pos = quotient_positions(u);
  const int d = static_cast<int>(pos.size());
  Mat r(m.field(), d, d);
  for (int j = 0; j < d; ++j) {
    Vec e(u.ambient(), 0);
    e[pos[j]] = 1;
    const Vec img = u.reduce(m.apply(e));
    for (int i = 0; i < d; ++i) r.set_code(i, j, img[pos[i]]);
  }
  return r;
}

std::vector<Mat> intertwiner_space(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size() || a.empty()) throw Error("intertwiner_space: generator count mismatch");
  const Field& f = a[0].field();
  const int n = a[0].rows();
  const int m = b[0].rows();
  const int vars = m * n;
  Mat eq(f, static_cast<int>(a.size()) * vars, vars);
  int row = 0;
  for (std::size_t g = 0; g < a.size(); ++g) {
    require_same_field(a[g].field_ptr(), b[g].field_ptr());
    // (P a - b P)[r][c] = sum_k P[r][k] a[k][c] - sum_k b[r][k] P[k][c]
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c, ++row) {
        for (int k = 0; k < n; ++k) {
          const Code x = a[g].code(k, c);
          if (x) eq.set_code(row, r * n + k, f.add(eq.code(row, r * n + k), x));
        }
        for (int k = 0; k < m; ++k) {
          const Code x = b[g].code(r, k);
          if (x) eq.set_code(row, k * n + c, f.sub(eq.code(row, k * n + c), x));
        }
      }
  }
  const Subspace k = kernel(eq);
  std::vector<Mat> out;
  for (const auto& v : k.basis()) {
    Mat p(f, m, n);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) p.set_code(r, c, v[r * n + c]);
    out.push_back(p);
  }
  return out;
}

std::optional<Mat> solve_intertwiner(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.empty() || a.size() != b.size() || a[0].rows() != b[0].rows()) return std::nullopt;
  if (a == b) return Mat::identity(a[0].field(), a[0].rows());
  const auto space = intertwiner_space(a, b);
  if (space.empty()) return std::nullopt;
  const Field& f = a[0].field();
  const int n = a[0].rows();
  const int s = static_cast<int>(space.size());
  const auto invertible = [&](const Mat& p) { return rank(p) == n; };

  for (const auto& p : space)
    if (invertible(p)) return p;

  const auto combine = [&](const std::vector<Code>& coef) {
    Mat p(f, n, n);
    for (int i = 0; i < s; ++i)
      if (coef[i]) p = p + space[i].scaled(f.from_code(coef[i]));
    return p;
  };

  const long long q = f.order();
  // Projective points of the hom space: 1 + q + ... + q^(s-1).
  long long points = 0;
  for (long long i = 0, t = 1; i < s && points <= 50000; ++i, t *= q) points += t;
  if (points <= 50000) {
    for (int lead = 0; lead < s; ++lead) {
      const int tail = s - 1 - lead;
      long long count = 1;
      for (int j = 0; j < tail; ++j) count *= q;
      for (long long idx = 0; idx < count; ++idx) {
        std::vector<Code> coef(s, 0);
        coef[lead] = 1;
        long long x = idx;
        for (int j = 0; j < tail; ++j) {
          coef[lead + 1 + j] = static_cast<Code>(x % q);
          x /= q;
        }
        const Mat p = combine(coef);
        if (invertible(p)) return p;
      }
    }
    return std::nullopt;
  }

  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(q) - 1);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    std::vector<Code> coef(s);
    for (auto& c : coef) c = static_cast<Code>(pick(rng));
    const Mat p = combine(coef);
    if (invertible(p)) return p;
  }
  throw Error("intertwiner search inconclusive: hom space of dimension " + std::to_string(s) +
              " too large to enumerate");
}

}  // namespace sl2c3
