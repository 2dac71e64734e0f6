#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wilf/error.hpp"
#include "wilf/semimodule.hpp"
#include "wilf/wilf_analysis.hpp"

namespace wilf {
namespace {

TEST(Semimodule, Normalization) {
  const auto ns = NumericalSemigroup::from_generators({3, 5});
  const GammaSemimodule d = semimodule_from_generators(ns, {12, 5});
  EXPECT_EQ(d.shift(), 5);
  EXPECT_EQ(d.minimal_generators(), (std::vector<Int>{0, 7}));
  EXPECT_EQ(semimodule_from_generators(ns, {0, 3, 8}).minimal_generators(), (std::vector<Int>{0}));
  EXPECT_EQ(semimodule_from_generators(ns, {0}).conductor(), ns.conductor());
  EXPECT_THROW(semimodule_from_generators(ns, std::span<const Int>{}), Error);
}

TEST(Semimodule, GapSemimoduleInvariants) {
  const auto ns = NumericalSemigroup::from_generators({3, 5});
  const GammaSemimodule d = gap_semimodule(ns, 7);
  EXPECT_EQ(d.conductor(), 5);
  EXPECT_EQ(d.delta(), 2);
  EXPECT_EQ(wilf_number(d), -1);
  EXPECT_EQ(wilf_function_semimodule(d, 3), 1);
  try {
    gap_semimodule(ns, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGap);
  }
}

TEST(GapWilf, SixEightThirtyFive) {
  const auto ns = NumericalSemigroup::from_generators({6, 8, 35});
  const std::vector<GapWilf> table = gap_wilf_table(ns);
  ASSERT_EQ(table.size(), 23U);
  const std::map<Int, Int> nonzero = {{2, 2}, {10, -2}, {25, -4}, {31, -4}, {33, -2}, {37, -2}, {39, -4}, {45, -4}};
  for (const auto& row : table) {
    const auto it = nonzero.find(row.gap);
    EXPECT_EQ(row.wilf, it == nonzero.end() ? 0 : it->second) << "g=" << row.gap;
  }
  const GapWilfExtremes ext = wilf_gap_extremes(table);
  EXPECT_EQ(ext.min, -4);
  EXPECT_EQ(ext.max, 2);
  EXPECT_EQ(ext.argmin_gaps, (std::vector<Int>{25, 31, 39, 45}));
  EXPECT_EQ(ext.argmax_gaps, (std::vector<Int>{2}));
}

TEST(GapWilf, BatchSieveMatchesSlowRoutes) {
  for (const auto& ns : oracle::random_semigroups(120, 21, 40)) {
    for (const auto& row : gap_wilf_table(ns)) {
      const GammaSemimodule d = gap_semimodule(ns, row.gap);
      ASSERT_EQ(row.conductor, d.conductor());
      ASSERT_EQ(row.delta, d.delta());
      ASSERT_EQ(row.wilf, wilf_gap(ns, row.gap));
      ASSERT_EQ(row.wilf, oracle::wilf_gap(ns, row.gap));
    }
  }
}

TEST(GapWilf, LargerSemigroupsAgainstOracle) {
  const auto ns = NumericalSemigroup::from_generators({13, 17, 29});
  const auto table = gap_wilf_table(ns);
  ASSERT_EQ(ns.genus(), 51);
  for (const auto& row : table) ASSERT_EQ(row.wilf, oracle::wilf_gap(ns, row.gap)) << row.gap;
}

TEST(GapWilf, BoundConjectureCounterexample) {
  const auto ns = NumericalSemigroup::from_generators({4, 5, 6, 7});
  const BoundCheck b = check_bound_conjecture(ns);
  EXPECT_EQ(b.min_wg, -1);
  EXPECT_EQ(b.minus_wilf_e, 0);
  EXPECT_FALSE(b.holds);
}

TEST(GapWilf, RangeBounds) {
  const auto ns = NumericalSemigroup::from_generators({3, 4, 5});
  const GapWilfExtremes ext = wilf_gap_extremes(ns);
  EXPECT_TRUE(check_prop_4_3(ns, ext));
  EXPECT_TRUE(check_thm_4_2(ns, ext));
  // The sharper range bound 2δ - 2 fails here: δ = 1, range = 1.
  EXPECT_FALSE(gap_range_sharp_bound(ns, ext));
  EXPECT_THROW(wilf_gap_extremes(NumericalSemigroup()), Error);
}

void expect_matches_oracle(const NumericalSemigroup& ns, std::size_t expected_count) {
  const auto reference = oracle::all_semimodules(ns);
  std::set<std::vector<Int>> ours;
  std::size_t visited = 0;
  for (const auto& d : enumerate_semimodules(ns)) {
    ++visited;
    ours.insert(d.minimal_generators());
    const auto ref = oracle::semimodule(ns, d.minimal_generators());
    EXPECT_EQ(ref.generators, d.minimal_generators());
    EXPECT_EQ(ref.conductor, d.conductor());
    EXPECT_EQ(ref.delta, d.delta());
  }
  std::set<std::vector<Int>> expected;
  for (const auto& shape : reference) expected.insert(shape.generators);
  EXPECT_EQ(visited, ours.size());
  EXPECT_EQ(ours, expected);
  EXPECT_EQ(visited, expected_count);
}

TEST(Enumerate, AgainstUnionOracle) {
  expect_matches_oracle(NumericalSemigroup::from_generators({3, 5}), 7);
  expect_matches_oracle(NumericalSemigroup::from_generators({2, 7}), 4);
  const auto larger = NumericalSemigroup::from_generators({4, 6, 7});
  expect_matches_oracle(larger, oracle::all_semimodules(larger).size());
}

TEST(Enumerate, MuInvariants) {
  const auto ns = NumericalSemigroup::from_generators({3, 5});
  EXPECT_GE(mu_gamma_delta(ns), mu(ns));
  EXPECT_EQ(mu_delta_r(ns, 1), mu(ns));
  EXPECT_THROW(mu_delta_r(ns, 0), Error);
  try {
    mu_delta_r(NumericalSemigroup::from_generators({2, 7}), 2);
    SUCCEED();
  } catch (const Error&) {
    FAIL();
  }
}

}  // namespace
}  // namespace wilf
