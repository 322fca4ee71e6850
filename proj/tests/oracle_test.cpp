#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "posetmc/centers.hpp"
#include "posetmc/error.hpp"
#include "posetmc/lifting.hpp"
#include "posetmc/oracle.hpp"
#include "posetmc/recognize.hpp"

namespace posetmc {
namespace {

bool contains_structure(const std::vector<ModelStruct>& all, const ModelStruct& m) {
  return std::any_of(all.begin(), all.end(), [&](const ModelStruct& o) { return o.same_classes(m); });
}

TEST(Enumerate, IdentitiesGiveOnlyTheTrivialStructure) {
  for (const char* name : {"two-structures", "forced", "chain-3"}) {
    auto l = fixture_rel(name)->lattice_ptr();
    auto rel = std::make_shared<const RelStruct>(validate_relative(l, MorphClass::identities(*l).pairs()));
    const auto all = enumerate_model_structures(rel);
    ASSERT_EQ(all.size(), 1u) << name;
    EXPECT_EQ(all[0].cof(), MorphClass::all(*l));
    EXPECT_EQ(all[0].fib(), MorphClass::all(*l));
  }
}

TEST(Enumerate, TwoStructuresCount) {
  auto rel = fixture_rel("two-structures");
  const auto all = enumerate_model_structures(rel);
  // Frozen from the independent brute force in tests/reference.
  EXPECT_EQ(all.size(), 10u);
  std::vector<testing::Signature> sigs;
  for (const auto& m : all) {
    EXPECT_TRUE(m.verified());
    sigs.push_back(testing::signature(m));
  }
  const auto& l = rel->lattice();
  EXPECT_NE(std::find(sigs.begin(), sigs.end(), testing::left_printed(l)), sigs.end());
  EXPECT_NE(std::find(sigs.begin(), sigs.end(), testing::right_printed(l)), sigs.end());
}

TEST(Enumerate, SortedAndDistinct) {
  const auto all = enumerate_model_structures(fixture_rel("two-structures"));
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto a = std::make_pair(all[i - 1].cof().pairs(), all[i - 1].fib().pairs());
    const auto b = std::make_pair(all[i].cof().pairs(), all[i].fib().pairs());
    EXPECT_LT(a, b);
  }
}

TEST(Enumerate, ForcedHasOne) {
  auto rel = fixture_rel("forced");
  const auto all = enumerate_model_structures(rel);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].same_classes(construct_terminal(rel)));
}

TEST(Enumerate, NoStructureWithoutStrongTwoOfThree) {
  EXPECT_TRUE(enumerate_model_structures(fixture_rel("s2of3-fail")).empty());
  EXPECT_FALSE(decide_by_enumeration(fixture_rel("s2of3-fail")));
}

TEST(Enumerate, NoStructureWithoutFactorization) {
  auto rel = testing::cw_fail();
  EXPECT_TRUE(check_s2of3(*rel).passed);
  EXPECT_FALSE(decide_by_enumeration(rel));
  EXPECT_FALSE(recognize_finite(rel).yes);
}

TEST(Enumerate, Caps) {
  auto rel = fixture_rel("trunc-1");
  try {
    enumerate_model_structures(rel);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(enumerate_model_structures(fixture_rel("two-structures"), {.max_elements = 10, .max_weq = 3}), Error);
  EXPECT_EQ(enumerate_model_structures(rel, {.max_elements = 11, .max_weq = 64}).size(), 1u);
}

TEST(Enumerate, CandidateCountAtLeastStructures) {
  auto rel = fixture_rel("two-structures");
  EXPECT_GE(count_candidate_classes(rel), enumerate_model_structures(rel).size());
}

TEST(Enumerate, ConstructionsAppear) {
  auto rel = fixture_rel("two-structures");
  const auto all = enumerate_model_structures(rel);
  EXPECT_TRUE(contains_structure(all, construct_terminal(rel)));
  for (const auto& chi : enumerate_centers(*rel).maps) {
    EXPECT_TRUE(contains_structure(all, construct_from_centers(rel, chi)));
    EXPECT_TRUE(contains_structure(all, construct_from_centers_dual(rel, chi)));
  }
}

TEST(Instances, Deterministic) {
  InstanceGen gen{.seed = 42};
  const auto a = random_instances(gen, 50);
  const auto b = random_instances(gen, 50);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i]->lattice().size(), b[i]->lattice().size());
    EXPECT_EQ(a[i]->lattice().comparable_pairs(), b[i]->lattice().comparable_pairs());
    EXPECT_EQ(a[i]->weq(), b[i]->weq());
  }
  gen.seed = 43;
  const auto c = random_instances(gen, 50);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    differs = differs || a[i]->lattice().comparable_pairs() != c[i]->lattice().comparable_pairs() ||
              a[i]->weq() != c[i]->weq();
  EXPECT_TRUE(differs);
}

TEST(Instances, RespectGeneratorBounds) {
  InstanceGen gen{.seed = 7, .min_elements = 3, .max_elements = 6, .max_weq = 8, .require_s2of3 = true};
  for (const auto& rel : random_instances(gen, 200)) {
    EXPECT_GE(rel->lattice().size(), 3u);
    EXPECT_LE(rel->lattice().size(), 6u);
    EXPECT_LE(rel->weq().non_identity_pairs().size(), 8u);
    EXPECT_TRUE(check_s2of3(*rel).passed);
    EXPECT_TRUE(is_subcategory(rel->lattice(), rel->weq()).passed);
  }
}

TEST(Instances, RecognitionAgreesWithEnumeration) {
  InstanceGen gen{.seed = 11, .max_elements = 6, .max_weq = 8};
  std::size_t yes = 0;
  for (const auto& rel : random_instances(gen, 300)) {
    const bool oracle = decide_by_enumeration(rel);
    EXPECT_EQ(recognize_finite(rel).yes, oracle);
    yes += oracle;
  }
  EXPECT_GT(yes, 0u);
  EXPECT_LT(yes, 300u);
}

}  // namespace
}  // namespace posetmc
