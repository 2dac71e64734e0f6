#include <gtest/gtest.h>

#include "oracles.hpp"
#include "wilf/error.hpp"
#include "wilf/records.hpp"
#include "wilf/semigroup.hpp"

namespace wilf {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InternalInconsistency;
}

TEST(Semigroup, SixEightThirtyFive) {
  const auto ns = NumericalSemigroup::from_generators({6, 8, 35});
  EXPECT_EQ(ns.minimal_generators(), (std::vector<Int>{6, 8, 35}));
  EXPECT_EQ(ns.frobenius(), 45);
  EXPECT_EQ(ns.conductor(), 46);
  EXPECT_EQ(ns.genus(), 23);
  EXPECT_EQ(ns.delta(), 23);
  EXPECT_EQ(ns.multiplicity(), 6);
  EXPECT_EQ(ns.embedding_dimension(), 3);
  EXPECT_EQ(type_of(ns), 1);
  EXPECT_TRUE(is_symmetric(ns));
  EXPECT_EQ(ns.gaps(), (std::vector<Int>{1, 2, 3, 4, 5, 7, 9, 10, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 33, 37,
                                         39, 45}));
}

TEST(Semigroup, Naturals) {
  const NumericalSemigroup n;
  EXPECT_TRUE(n.is_naturals());
  EXPECT_EQ(n.frobenius(), -1);
  EXPECT_EQ(n.conductor(), 0);
  EXPECT_EQ(n.multiplicity(), 1);
  EXPECT_EQ(n.embedding_dimension(), 1);
  EXPECT_EQ(NumericalSemigroup::from_generators({1, 5}), n);
  EXPECT_TRUE(is_symmetric(n));
  EXPECT_EQ(kind_of([&] { type_of(n); }), ErrorKind::NaturalsHasNoType);
}

TEST(Semigroup, InputErrors) {
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators(std::span<const Int>{}); }), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators({4, 6}); }), ErrorKind::NotCofinite);
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_generators({0, 3}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { NumericalSemigroup::from_gaps(std::vector<Int>{2}); }), ErrorKind::InvalidArgument);
  const auto ns = NumericalSemigroup::from_generators({3, 5});
  EXPECT_EQ(kind_of([&] { apery_set(ns, 4); }), ErrorKind::NotAMember);
}

TEST(Semigroup, RedundantGeneratorsDropped) {
  const auto ns = NumericalSemigroup::from_generators({10, 3, 5, 8, 6, 5});
  EXPECT_EQ(ns.minimal_generators(), (std::vector<Int>{3, 5}));
  EXPECT_EQ(ns.frobenius(), 7);
}

TEST(Semigroup, ThresholdSemigroups) {
  const auto s4 = NumericalSemigroup::with_threshold({88, 100, 102}, 566);
  EXPECT_EQ(s4.conductor(), 566);
  EXPECT_EQ(s4.delta(), 63);
  EXPECT_EQ(s4.embedding_dimension(), 63);
  EXPECT_EQ(s4, parse_semigroup("88, 100, 102 @ 566"));
}

TEST(Semigroup, TypeOfFourGenerated) {
  const auto ns = NumericalSemigroup::from_generators({213, 216, 226, 227});
  EXPECT_EQ(ns.embedding_dimension(), 4);
  EXPECT_EQ(type_of(ns), 14);
  EXPECT_EQ(type_of(ns), oracle::type(ns));
}

TEST(Semigroup, AperyAndDivides) {
  const auto ns = NumericalSemigroup::from_generators({3, 5});
  const AperySet ap = apery_set(ns, 3);
  EXPECT_EQ(ap.elements, (std::vector<Int>{0, 5, 10}));
  EXPECT_EQ(ap.by_residue, (std::vector<Int>{0, 10, 5}));
  EXPECT_TRUE(divides(ns, 3, 8));
  EXPECT_FALSE(divides(ns, 5, 9));
}

TEST(Semigroup, RandomAgainstOracles) {
  for (const auto& ns : oracle::random_semigroups(200, 7)) {
    const Int limit = ns.conductor() + 3 * ns.multiplicity() + 5;
    const auto ref = oracle::closure(ns.minimal_generators(), limit);
    for (Int n = 0; n < limit; ++n) ASSERT_EQ(ns.contains(n), ref[static_cast<std::size_t>(n)]) << n;
    EXPECT_EQ(sieve_from_generators(ns.minimal_generators(), limit), ref);
    EXPECT_EQ(NumericalSemigroup::from_gaps(ns.gaps()), ns);
    EXPECT_EQ(NumericalSemigroup::from_gaps(ns.gaps()).minimal_generators(), ns.minimal_generators());
    if (ns.is_naturals()) continue;
    EXPECT_EQ(type_of(ns), oracle::type(ns));
    bool reflective = true;
    for (Int z = 0; z <= ns.frobenius(); ++z) reflective = reflective && (ns.contains(z) != ns.contains(ns.frobenius() - z));
    EXPECT_EQ(is_symmetric(ns), reflective);
    const AperySet ap = apery_set(ns, ns.multiplicity());
    for (Int w : ap.elements) {
      EXPECT_TRUE(ns.contains(w));
      EXPECT_FALSE(ns.contains(w - ns.multiplicity()));
    }
  }
}

TEST(Records, ParseSpecStrings) {
  EXPECT_EQ(parse_semigroup(" 6 , 8,35 ").minimal_generators(), (std::vector<Int>{6, 8, 35}));
  EXPECT_TRUE(parse_semigroup("1").is_naturals());
  for (const char* bad : {"", "3,,5", "3,x", "3,5@", "3,5@2@4", "-3,5", "0,3", "3;5"}) {
    EXPECT_EQ(kind_of([&] { parse_semigroup(bad); }), ErrorKind::ParseError) << bad;
  }
  EXPECT_EQ(kind_of([] { parse_semigroup("99999999999999999999"); }), ErrorKind::Overflow);
  EXPECT_EQ(kind_of([] { parse_semigroup("4,6"); }), ErrorKind::NotCofinite);
}

TEST(Records, CanonicalRecord) {
  const auto rec = semigroup_record(parse_semigroup("3,5"));
  std::vector<std::string> keys;
  for (const auto& [k, v] : rec.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"generators", "multiplicity", "frobenius", "conductor", "genus", "delta",
                                            "embedding_dimension", "type", "symmetric"}));
  EXPECT_FALSE(semigroup_record(NumericalSemigroup()).contains("type"));
}

}  // namespace
}  // namespace wilf
