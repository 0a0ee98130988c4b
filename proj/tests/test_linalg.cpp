#include <gtest/gtest.h>

#include "sl2c3/linalg.hpp"
#include "sl2c3/poly.hpp"
#include "sl2c3/sl2.hpp"
#include "sl2c3/tensor.hpp"

using namespace sl2c3;

namespace {

const Field& F3() { return gf(1); }

Poly ints(const Field& f, std::initializer_list<int> cs) {
  Poly p;
  for (int c : cs) p.push_back(f.from_int(c));
  return p;
}

}  // namespace

TEST(Mat, Products) {
  const Mat a = Mat::from_ints(F3(), {{1, 1}, {0, 1}});
  EXPECT_EQ(Mat::identity(F3(), 2) * a, a);
  EXPECT_EQ(a * a, Mat::from_ints(F3(), {{1, 2}, {0, 1}}));
  EXPECT_EQ(a.pow(3), Mat::identity(F3(), 2));
  EXPECT_TRUE(a.scaled(F3().zero()).is_zero());
  EXPECT_EQ(a.transpose().transpose(), a);
}

TEST(Mat, Kron) {
  const Mat a = Mat::from_ints(F3(), {{1, 2}, {0, 1}});
  const Mat i2 = Mat::identity(F3(), 2);
  const Mat k = kron(a, i2);
  EXPECT_EQ(k.rows(), 4);
  EXPECT_EQ(k.at(0, 2), F3().from_int(2));
  EXPECT_EQ(kron(i2, i2), Mat::identity(F3(), 4));
}

TEST(Mat, RankInverseDeterminant) {
  const Mat a = Mat::from_ints(F3(), {{1, 2, 0}, {0, 1, 1}, {1, 0, 1}});
  EXPECT_EQ(rank(a), 2);  // row 3 = row 1 + row 2
  EXPECT_FALSE(inverse(a).has_value());
  EXPECT_EQ(determinant(a), F3().zero());

  const Mat b = Mat::from_ints(F3(), {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  const auto bi = inverse(b);
  ASSERT_TRUE(bi.has_value());
  EXPECT_EQ(*bi * b, Mat::identity(F3(), 3));
  EXPECT_NE(determinant(b), F3().zero());
}

TEST(Mat, ScalarValue) {
  EXPECT_EQ(Mat::identity(F3(), 3).scaled(F3().from_int(2)).scalar_value(), F3().from_int(2));
  EXPECT_FALSE(Mat::from_ints(F3(), {{1, 1}, {0, 1}}).scalar_value().has_value());
}

TEST(Subspace, EchelonBasisIsCanonical) {
  const Subspace a = Subspace::span(F3(), 3, {{1, 1, 0}, {0, 1, 1}});
  const Subspace b = Subspace::span(F3(), 3, {{1, 2, 1}, {1, 0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2);
  EXPECT_TRUE(a.contains(Vec{1, 2, 1}));
  EXPECT_FALSE(a.contains(Vec{1, 0, 0}));
  EXPECT_EQ(a.intersect(Subspace::span(F3(), 3, {{1, 0, 0}, {0, 1, 0}})).dim(), 1);
  EXPECT_EQ(a.plus(Vec{1, 0, 0}), Subspace::full(F3(), 3));
}

TEST(Kernel, Basics) {
  EXPECT_EQ(kernel(Mat::identity(F3(), 3)).dim(), 0);
  EXPECT_EQ(kernel(Mat(F3(), 3, 3)), Subspace::full(F3(), 3));
  // X+ of T(0,0,0) kills only e1.
  const Rep t = make_T(F3().zero(), F3().zero(), F3().zero());
  EXPECT_EQ(kernel(t.xplus), Subspace::span(F3(), 3, {{1, 0, 0}}));
  const Mat m = Mat::from_ints(F3(), {{1, 2, 0}, {0, 1, 1}});
  const Subspace k = kernel(m);
  for (const auto& v : k.basis()) EXPECT_TRUE(Subspace(F3(), 2).contains(m.apply(v)));
  EXPECT_EQ(k.dim() + image(m).dim(), 3);
}

TEST(Poly, Arithmetic) {
  const Field& f = F3();
  const Poly a = ints(f, {1, 1});  // x + 1
  const Poly b = ints(f, {2, 1});  // x + 2
  EXPECT_EQ(poly_mul(a, b), ints(f, {2, 0, 1}));
  const auto [q, r] = poly_divmod(ints(f, {2, 0, 1}), a);
  EXPECT_EQ(q, b);
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(poly_degree({}), -1);
  EXPECT_EQ(poly_linear_power(f.one(), 2), ints(f, {1, 1, 1}));  // (x-1)^2 = x^2 - 2x + 1
  EXPECT_EQ(poly_str(ints(f, {1, 0, 2, 1})), "x^3 + 2x^2 + 1");
  EXPECT_THROW(poly_divmod(a, {}), Error);
}

TEST(Poly, SplittingDegree) {
  EXPECT_EQ(splitting_degree(ints(F3(), {1, 0, 1}), 6), 2);
  EXPECT_EQ(splitting_degree(ints(F3(), {0, 2, 0, 1}), 6), 1);
  EXPECT_EQ(splitting_degree(ints(F3(), {1, 2, 0, 1}), 6), 3);  // x^3 + 2x + 1 irreducible
  EXPECT_EQ(splitting_degree(ints(F3(), {1, 2, 0, 1}), 2), 0);
}

TEST(CharMin, Examples) {
  const Field& f = F3();
  EXPECT_EQ(charpoly(Mat::identity(f, 3)), poly_linear_power(f.one(), 3));
  const Mat j = Mat::from_ints(f, {{1, 1}, {0, 1}});
  EXPECT_EQ(minpoly(j), poly_linear_power(f.one(), 2));
  EXPECT_EQ(minpoly(Mat::identity(f, 3)), poly_linear_power(f.one(), 1));
}

TEST(CharMin, ProductWeightSpace) {
  // X+X- on the weight-1 space of 2 (x) T(1,0,0) has minimal polynomial (x-1)^2.
  const Field& f = F3();
  const Rep r = tensor(make_standard(2, f), make_T(f.one(), f.zero(), f.zero()));
  const Mat m = xpxm_on_weight(r, f.one());
  EXPECT_EQ(m.rows(), 2);
  EXPECT_EQ(minpoly(m), poly_linear_power(f.one(), 2));
}

TEST(Eigenspaces, Examples) {
  const Field& f = F3();
  const auto id = eigenspaces(Mat::identity(f, 2));
  ASSERT_EQ(id.size(), 1u);
  EXPECT_EQ(id[0].value, f.one());
  EXPECT_EQ(id[0].space.dim(), 2);
  EXPECT_EQ(eigenspaces(Mat::from_ints(f, {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}})).size(), 3u);
  EXPECT_TRUE(eigenspaces(Mat::from_ints(f, {{0, 2}, {1, 0}})).empty());  // x^2 + 1
  const auto gen = generalized_eigenspaces(Mat::from_ints(f, {{1, 1}, {0, 1}}));
  ASSERT_EQ(gen.size(), 1u);
  EXPECT_EQ(gen[0].space.dim(), 2);
}

TEST(Eigenspaces, SquareRootEigenvalues) {
  // X+X- on V_0 of 2 (x) T(2,1,0) over GF(9): eigenvalues 2 +- sqrt 2 = 2 +- t.
  const Field& f = gf(2);
  const FieldElem t = f.gen(), two = f.from_int(2);
  const Rep r = tensor(make_standard(2, f), make_T(two, f.one(), f.zero()));
  const auto es = eigenspaces(xpxm_on_weight(r, f.zero()));
  ASSERT_EQ(es.size(), 2u);
  std::vector<FieldElem> got{es[0].value, es[1].value};
  EXPECT_TRUE((got[0] == two + t && got[1] == two - t) || (got[0] == two - t && got[1] == two + t));
}

TEST(Restrict, Examples) {
  const Field& f = F3();
  const Subspace u = Subspace::span(f, 3, {{1, 1, 0}});
  EXPECT_EQ(restrict_to(Mat::identity(f, 3), u), Mat::identity(f, 1));
  const Mat d = Mat::from_ints(f, {{1, 0}, {0, 2}});
  EXPECT_EQ(restrict_to(d, Subspace::span(f, 2, {{0, 1}})), Mat::from_ints(f, {{2}}));
  EXPECT_THROW(restrict_to(Mat::from_ints(f, {{1, 1}, {0, 1}}), Subspace::span(f, 2, {{0, 1}})), Error);
  EXPECT_EQ(quotient_action(d, Subspace::span(f, 2, {{1, 0}})), Mat::from_ints(f, {{2}}));
  EXPECT_EQ(quotient_action(d, Subspace(f, 2)), d);
  EXPECT_EQ(quotient_positions(Subspace::span(f, 3, {{0, 1, 0}})), (std::vector<int>{0, 2}));
}

TEST(Restrict, WeightZeroOfTwoTimesTwo) {
  const Field& f = F3();
  const Rep r = tensor(make_standard(2, f), make_standard(2, f));
  EXPECT_TRUE(restrict_to_weight(r, r.h, f.zero()).is_zero());
  EXPECT_EQ(restrict_to_weight(r, r.h, f.zero()).rows(), 2);
}

TEST(Intertwiner, EqualFamiliesGiveIdentity) {
  const Field& f = F3();
  const Rep t = make_T(f.one(), f.one(), f.zero());
  const auto p = solve_intertwiner({t.xminus, t.h, t.xplus}, {t.xminus, t.h, t.xplus});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, Mat::identity(f, 3));
}

TEST(Intertwiner, AntiDiagonalCarriesDual) {
  const Field& f = F3();
  const FieldElem o = f.one();
  const Rep d = dual(make_T(o, o, f.zero()));
  const Rep t = make_T(-o, -o, f.zero());
  const Mat s = Mat::from_ints(f, {{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  EXPECT_EQ(s * d.xminus, t.xminus * s);
  EXPECT_EQ(s * d.xplus, t.xplus * s);
  EXPECT_EQ(s * d.h, t.h * s);
  const auto p = solve_intertwiner({d.xminus, d.h, d.xplus}, {t.xminus, t.h, t.xplus});
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p * d.xplus, t.xplus * *p);
}

TEST(Intertwiner, AbsentForDifferentKernels) {
  const Field& f = F3();
  const Rep a = make_T_unchecked(f.zero(), f.zero(), f.one());
  const Rep b = make_T(f.zero(), f.zero(), f.zero());
  EXPECT_FALSE(solve_intertwiner({a.xminus, a.h, a.xplus}, {b.xminus, b.h, b.xplus}).has_value());
}
