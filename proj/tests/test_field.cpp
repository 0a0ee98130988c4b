#include <gtest/gtest.h>

#include "sl2c3/field.hpp"

using namespace sl2c3;

namespace {

FieldElem t9() { return gf(2).gen(); }

}  // namespace

TEST(Field, PrimeField) {
  const Field& f = make_field(1);
  EXPECT_EQ(f.order(), 3);
  EXPECT_EQ(f.degree(), 1);
  EXPECT_EQ(f.name(), "GF(3)");
  EXPECT_TRUE(f.is_prime_field());
}

TEST(Field, ExplicitModulus) {
  const Field& f = make_field(2, std::vector<int>{1, 0, 1});
  EXPECT_EQ(f.order(), 9);
  EXPECT_EQ(f.gen() * f.gen(), f.from_int(2));
  EXPECT_THROW(make_field(2, std::vector<int>{0, 1, 1}), Error);
  EXPECT_THROW(make_field(0), Error);
  EXPECT_THROW(make_field(7), Error);
}

TEST(Field, FieldsAreInterned) {
  EXPECT_EQ(&gf(3), &make_field(3));
  EXPECT_EQ(&make_field(2, std::vector<int>{1, 0, 1}), &gf(2));
}

TEST(Field, DefaultModuliAreIrreducible) {
  for (int k = 1; k <= 6; ++k) {
    EXPECT_TRUE(is_irreducible_gf3(default_modulus(k))) << k;
    EXPECT_EQ(gf(k).order(), [k] {
      int q = 1;
      for (int i = 0; i < k; ++i) q *= 3;
      return q;
    }());
  }
  EXPECT_FALSE(is_irreducible_gf3({2, 0, 1}));  // x^2 - 1
  EXPECT_TRUE(is_irreducible_gf3({1, 0, 1}));
}

TEST(Field, Arithmetic) {
  const Field& f = gf(1);
  EXPECT_EQ(f.from_int(2) + f.from_int(2), f.one());
  EXPECT_EQ(-f.one(), f.from_int(2));
  EXPECT_EQ(f.from_int(-1), f.from_int(2));
  EXPECT_EQ(f.from_int(2).inv(), f.from_int(2));
  EXPECT_THROW(f.zero().inv(), Error);
  EXPECT_EQ(t9().inv(), t9() * gf(2).from_int(2));
}

TEST(Field, SquareRoots) {
  const Field& f = gf(1);
  EXPECT_EQ(f.sqrt(f.one()), f.one());
  EXPECT_FALSE(f.sqrt(f.from_int(2)).has_value());
  EXPECT_EQ(f.sqrt(f.zero()), f.zero());
  EXPECT_EQ(gf(2).sqrt(gf(2).from_int(2)), t9());
  // Every square of GF(27) has its smaller root returned.
  const Field& g = gf(3);
  for (const auto& a : g.elements()) {
    const auto r = g.sqrt(a * a);
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(*r * *r, a * a);
    EXPECT_FALSE(encoding_less(-*r, *r));
  }
}

TEST(Field, CubeRoots) {
  EXPECT_EQ(gf(1).cbrt(gf(1).from_int(2)), gf(1).from_int(2));
  EXPECT_EQ(gf(2).cbrt(gf(2).from_int(2) * t9()), t9());
  EXPECT_EQ(gf(2).cbrt(gf(2).zero()), gf(2).zero());
}

TEST(Field, Lift) {
  EXPECT_EQ(lift(gf(1).from_int(2), gf(2)), gf(2).from_int(2));
  EXPECT_EQ(lift(t9(), gf(2)), t9());
  EXPECT_THROW(lift(t9(), gf(1)), Error);
  EXPECT_THROW(lift(t9(), gf(3)), Error);
  // The embedding GF(9) -> GF(729) is a ring homomorphism.
  const Field& big = gf(6);
  for (const auto& a : gf(2).elements())
    for (const auto& b : gf(2).elements()) {
      EXPECT_EQ(lift(a + b, big), lift(a, big) + lift(b, big));
      EXPECT_EQ(lift(a * b, big), lift(a, big) * lift(b, big));
    }
}

TEST(Field, LiteralGrammar) {
  EXPECT_EQ(gf(1).from_int(2).str(), "2");
  EXPECT_EQ(t9().str(), "[0,1]");
  EXPECT_EQ(parse_elem(gf(2), "[0,1]"), t9());
  EXPECT_EQ(parse_elem(gf(2), "2"), gf(2).from_int(2));
  EXPECT_EQ(parse_elem(gf(1), "1"), gf(1).one());
  EXPECT_THROW(parse_elem(gf(1), "[0,1]"), Error);
  EXPECT_THROW(parse_elem(gf(2), "[0,1"), Error);
  EXPECT_THROW(parse_elem(gf(1), "x"), Error);
  for (const auto& a : gf(3).elements()) EXPECT_EQ(parse_elem(gf(3), a.str()), a);
}

TEST(Field, EncodingOrder) {
  const Field& f = gf(2);
  EXPECT_TRUE(encoding_less(f.zero(), f.one()));
  // c0 is compared first: t = (0,1) precedes 2 = (2,0).
  EXPECT_TRUE(encoding_less(t9(), f.from_int(2)));
  EXPECT_FALSE(encoding_less(f.from_int(2), t9()));
}

TEST(PolyRoots, Examples) {
  const Field& f = gf(1);
  const FieldElem z = f.zero(), o = f.one(), two = f.from_int(2);

  const PolyRoots none = poly_roots({o, z, o});
  EXPECT_TRUE(none.roots.empty());
  EXPECT_EQ(none.cofactor_degree, 2);

  const PolyRoots three = poly_roots({z, two, z, o});  // x^3 - x
  ASSERT_EQ(three.roots.size(), 3u);
  for (const auto& r : three.roots) EXPECT_EQ(r.mult, 1);
  EXPECT_EQ(three.cofactor_degree, 0);

  const PolyRoots dbl = poly_roots({o, two, o});  // (x+1)^2
  ASSERT_EQ(dbl.roots.size(), 1u);
  EXPECT_EQ(dbl.roots[0].root, two);
  EXPECT_EQ(dbl.roots[0].mult, 2);
}

TEST(MaxExtension, EnvironmentOverride) {
  ::setenv("SL2_MAX_EXT_DEGREE", "2", 1);
  EXPECT_EQ(max_extension_degree(), 2);
  ::setenv("SL2_MAX_EXT_DEGREE", "40", 1);
  EXPECT_EQ(max_extension_degree(), 6);
  ::unsetenv("SL2_MAX_EXT_DEGREE");
  EXPECT_EQ(max_extension_degree(), 6);
}
