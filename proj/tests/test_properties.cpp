#include <gtest/gtest.h>

#include "checks.hpp"

using namespace sl2c3;
namespace ck = sl2c3::checks;

// Exhaustive up to GF(27), seeded random at GF(81).  The larger sweeps live
// in the acceptance binary; these keep the suite quick.

class SmallFields : public ::testing::TestWithParam<int> {};

TEST_P(SmallFields, FieldAxioms) {
  const auto r = ck::field_axioms(gf(GetParam()), 0, 1);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST_P(SmallFields, Frobenius) {
  const auto r = ck::frobenius(gf(GetParam()), 0, 1);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST_P(SmallFields, WeightShift) {
  const auto r = ck::weight_shift(gf(GetParam()), 0, 1);
  EXPECT_TRUE(r.ok()) << r.summary();
}

INSTANTIATE_TEST_SUITE_P(GF, SmallFields, ::testing::Values(1, 2, 3));

TEST(CayleyHamilton, ExhaustiveSmall) {
  for (int k : {1, 2}) {
    const auto r = ck::cayley_hamilton(gf(k), 0, 1);
    EXPECT_TRUE(r.ok()) << k << ": " << r.summary();
  }
}

TEST(CayleyHamilton, RandomGF81) {
  const auto r = ck::cayley_hamilton(gf(4), 200, 5);
  EXPECT_TRUE(r.ok()) << r.summary();
  EXPECT_EQ(r.cases, 200);
}

TEST(RandomGF81, ElementsAndProducts) {
  for (const auto& r : {ck::field_axioms(gf(4), 300, 2), ck::frobenius(gf(4), 300, 2), ck::weight_shift(gf(4), 50, 2)})
    EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(DimensionConservation, GF3Pairs) {
  const auto r = ck::dimension_conservation(gf(1), 0, 1);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(DimensionConservation, RandomGF9) {
  const auto r = ck::dimension_conservation(gf(2), 100, 9);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Result, OkNeedsCases) {
  ck::Result r;
  EXPECT_FALSE(r.ok());
  r.cases = 1;
  EXPECT_TRUE(r.ok());
  r.fail("x");
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.witness, "x");
}
