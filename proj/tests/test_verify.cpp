#include <gtest/gtest.h>

#include <algorithm>

#include "sl2c3/verify.hpp"

using namespace sl2c3;

namespace {

const Field& F3() { return gf(1); }

bool same(const PairRecord& a, const PairRecord& b) {
  if (a.id != b.id || a.match != b.match || a.ok() != b.ok()) return false;
  if (a.engine.has_value() != b.engine.has_value()) return false;
  return !a.engine || a.engine->json() == b.engine->json();
}

}  // namespace

TEST(ModuleList, Sizes) {
  EXPECT_EQ(module_list(F3()).size(), 29u);
  EXPECT_EQ(module_list(gf(2)).size(), 737u);
  EXPECT_EQ(all_pairs(F3()).size(), 435u);
}

TEST(HittingSet, UnreachedRowsNeedExcludedParameters) {
  const HittingSet hs = hitting_set(gf(2));
  const std::vector<CaseId> want{{"2", "c=0; d=1; b=0"}, {"2", "c=0; d=2; b=0"}};
  EXPECT_EQ(hs.unreached, want);
  for (const auto& [l, r] : hs.pairs) EXPECT_FALSE(classify(l, r, gf(2)).row.empty());
}

TEST(Sample, DeterministicForSeed) {
  const auto a = sample_pairs(gf(2), 50, 7);
  const auto b = sample_pairs(gf(2), 50, 7);
  const auto c = sample_pairs(gf(2), 50, 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(Run, JobsDoNotChangeResults) {
  const auto pairs = sample_pairs(F3(), 60, 3);
  const auto one = run_pairs(pairs, F3(), false, 1);
  const auto four = run_pairs(pairs, F3(), false, 4);
  ASSERT_EQ(one.size(), four.size());
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_TRUE(same(one[i], four[i])) << i;
}

TEST(Run, EveryGF3PairAgrees) {
  const auto recs = run_pairs(all_pairs(F3()), F3(), false, 1);
  for (const auto& r : recs) EXPECT_TRUE(r.ok()) << r.left.str() << " x " << r.right.str() << " " << r.id.str();
}

TEST(Run, DualWrappedFactors) {
  const auto mods = module_list(F3());
  for (std::size_t i = 0; i < mods.size(); i += 2)
    for (std::size_t j = 1; j < mods.size(); j += 3) {
      const PairRecord r = run_pair(ModuleParams::dual(mods[i]), mods[j], F3(), false);
      EXPECT_TRUE(r.ok()) << r.left.str() << " x " << r.right.str();
    }
}

TEST(Run, LiteralFailuresAreExplained) {
  const PairRecord r = run_pair(ModuleParams::two(), ModuleParams::T(F3().one(), F3().one(), F3().zero()), F3(), true);
  EXPECT_FALSE(r.match);
  EXPECT_TRUE(failure_is_misprint(r, true));
  const PairRecord d = run_pair(ModuleParams::two(), ModuleParams::two(), F3(), true);
  EXPECT_TRUE(d.ok());
}
