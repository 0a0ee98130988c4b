#include <gtest/gtest.h>

#include "sl2c3/sl2.hpp"
#include "sl2c3/tensor.hpp"

using namespace sl2c3;

namespace {

const Field& F3() { return gf(1); }
FieldElem n(int v) { return F3().from_int(v); }

}  // namespace

TEST(Standard, Modules) {
  const Rep one = make_standard(1, F3());
  EXPECT_EQ(one.dim(), 1);
  EXPECT_TRUE(one.xminus.is_zero() && one.h.is_zero() && one.xplus.is_zero());

  const Rep two = make_standard(2, F3());
  EXPECT_EQ(two.h, Mat::from_ints(F3(), {{1, 0}, {0, -1}}));
  EXPECT_EQ(two.xminus.apply({1, 0}), (Vec{0, 1}));
  EXPECT_FALSE(validate(two).has_value());

  const Rep three = make_standard(3, F3());
  const Rep t000 = make_T(n(0), n(0), n(0));
  EXPECT_EQ(three.xminus, t000.xminus);
  EXPECT_EQ(three.xplus, t000.xplus);
  EXPECT_EQ(three.h, t000.h);
}

TEST(FamilyT, Matrices) {
  const Rep t = make_T(n(0), n(0), n(0));
  EXPECT_EQ(t.xplus, Mat::from_ints(F3(), {{0, 2, 0}, {0, 0, 2}, {0, 0, 0}}));  // a1 = a2 = 2
  const Rep u = make_T(n(1), n(1), n(0));                                      // a1 = a2 = 0
  EXPECT_EQ(u.xplus, Mat::from_ints(F3(), {{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}));
  EXPECT_EQ(u.xminus, Mat::from_ints(F3(), {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(u.h, Mat::from_ints(F3(), {{-1, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  EXPECT_THROW(make_T(n(0), n(0), n(1)), Error);
  EXPECT_THROW(make_T(n(0), n(0), n(2)), Error);
}

TEST(FamilyTt, Matrices) {
  const Rep t = make_Ttilde(n(1), n(1), n(0));
  EXPECT_EQ(t.xminus, Mat::from_ints(F3(), {{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_THROW(make_Ttilde(n(0), n(0), n(1)), Error);
  EXPECT_FALSE(validate(make_Ttilde(n(2), n(2), n(0))).has_value());
}

TEST(Validate, EveryFamilyMemberOverGF9) {
  const Field& f = gf(2);
  for (const auto& b : f.elements())
    for (const auto& c : f.elements())
      for (const auto& d : f.elements()) {
        if (!is_admissible(b, c, d)) continue;
        EXPECT_FALSE(validate(make_T(b, c, d)).has_value());
        EXPECT_FALSE(validate(make_Ttilde(b, c, d)).has_value());
      }
}

TEST(Validate, ReportsBrokenBracket) {
  Rep r = make_T(n(1), n(1), n(0));
  r.xplus.set(0, 1, r.xplus.at(0, 1) + F3().one());  // perturb a1
  const auto v = validate(r);
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("[X+,X-]-H"), std::string::npos);

  Rep zero;
  zero.xminus = zero.h = zero.xplus = Mat(F3(), 3, 3);
  EXPECT_FALSE(validate(zero).has_value());
}

TEST(Dual, Involution) {
  const Rep t = make_T(n(1), n(2), n(0));
  const Rep dd = dual(dual(t));
  EXPECT_EQ(dd.xminus, t.xminus);
  EXPECT_EQ(dd.h, t.h);
  EXPECT_EQ(dd.xplus, t.xplus);
  EXPECT_EQ(dual(make_standard(1, F3())).dim(), 1);
  EXPECT_FALSE(validate(dual(t)).has_value());
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(is_irreducible(make_T(n(1), n(1), n(0))));
  EXPECT_TRUE(is_irreducible(make_Ttilde(n(1), n(1), n(0))));
  EXPECT_TRUE(is_irreducible(make_standard(2, F3())));
  EXPECT_FALSE(is_irreducible(make_T_unchecked(n(0), n(0), n(1))));
  EXPECT_FALSE(is_irreducible(make_T(n(1), n(0), n(1))));  // admissible but reducible
  const Rep two = make_standard(2, F3());
  EXPECT_FALSE(is_irreducible(tensor(two, two)));
}

TEST(Irreducible, LargeFieldsUseGenerators) {
  const Field& f = gf(4);
  const FieldElem t = f.gen();
  EXPECT_TRUE(is_irreducible(make_T(t, t * t, t + f.one())));
  EXPECT_FALSE(is_irreducible(make_T(t, f.zero(), f.one())));
}

TEST(Parse, Grammar) {
  const ModuleParams t = parse_module_params(F3(), "T(1,1,0)");
  EXPECT_EQ(t.kind(), ModuleParams::Kind::T);
  EXPECT_EQ(t.b(), n(1));
  EXPECT_EQ(parse_module_params(F3(), " Two ").kind(), ModuleParams::Kind::Two);
  EXPECT_EQ(parse_module_params(F3(), "One").kind(), ModuleParams::Kind::One);

  const ModuleParams d = parse_module_params(F3(), "Dual(Tt(2,2,0))");
  ASSERT_EQ(d.kind(), ModuleParams::Kind::Dual);
  EXPECT_EQ(d.inner().kind(), ModuleParams::Kind::Tt);
  EXPECT_EQ(d.str(), "Dual(Tt(2,2,0))");

  const ModuleParams g = parse_module_params(gf(2), "T([0,1],1,[2,2])");
  EXPECT_EQ(g.b(), gf(2).gen());
  EXPECT_EQ(parse_module_params(gf(2), g.str()), g);
}

TEST(Parse, Errors) {
  try {
    parse_module_params(F3(), "T(0,0,1)");
    FAIL() << "excluded parameters accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("excluded"), std::string::npos);
  }
  try {
    parse_module_params(F3(), "T(1,1;0)");
    FAIL() << "syntax error accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("5"), std::string::npos) << e.what();  // position of ';'
  }
  EXPECT_THROW(parse_module_params(F3(), "Three"), Error);
  EXPECT_THROW(parse_module_params(F3(), "T(1,1)"), Error);
  EXPECT_THROW(parse_module_params(F3(), "Dual(T(0,0,2))"), Error);
  EXPECT_THROW(parse_module_params(F3(), "T(1,1,0) x"), Error);
}

TEST(Build, ModuleParamsRoundTrip) {
  const ModuleParams p = ModuleParams::dual(ModuleParams::T(n(1), n(2), n(0)));
  const Rep r = build(p, F3());
  const Rep expect = dual(make_T(n(1), n(2), n(0)));
  EXPECT_EQ(r.xplus, expect.xplus);
  EXPECT_EQ(build(ModuleParams::two(), gf(2)).field().degree(), 2);
  EXPECT_EQ(build(ModuleParams::T(n(1), n(1), n(0)), gf(2)).field().degree(), 2);
}
