#include <gtest/gtest.h>

#include "helpers.hpp"
#include "posetmc/centers.hpp"
#include "posetmc/error.hpp"
#include "posetmc/invariants.hpp"

namespace posetmc {
namespace {

using testing::cls;
using testing::el;
using testing::pr;

// chi sending the component {A, B, B', C} to `center`, identity elsewhere.
CenterMap two_structures_chi(const FiniteLattice& l, const char* center) {
  std::vector<Element> v(l.size());
  for (Element a = 0; a < l.size(); ++a) v[a] = a;
  for (const char* n : {"A", "B", "B'", "C"}) v[l.index_of(n)] = l.index_of(center);
  return CenterMap(v);
}

TEST(Centers, IdentityOnIdentities) {
  auto l = fixture_rel("two-structures")->lattice_ptr();
  const auto ids = MorphClass::identities(*l).pairs();
  const RelStruct r = validate_relative(l, ids);
  const CenterMap id = CenterMap::identity(l->size());
  EXPECT_TRUE(validate_centers(r, id).passed());
  EXPECT_EQ(find_centers(r), id);
  EXPECT_EQ(compute_Jchi(r, id), MorphClass::identities(*l));
  EXPECT_EQ(compute_Qchi(r, id), MorphClass::identities(*l));
  EXPECT_EQ(compute_Wc_chi(r, id), MorphClass::identities(*l));
  EXPECT_EQ(compute_Wf_chi(r, id), MorphClass::identities(*l));
}

TEST(Centers, TwoStructuresHasFourChoices) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  for (const char* c : {"A", "B", "B'", "C"}) EXPECT_TRUE(validate_centers(*rel, two_structures_chi(l, c)).passed()) << c;
  const auto all = enumerate_centers(*rel);
  EXPECT_FALSE(all.truncated);
  ASSERT_EQ(all.maps.size(), 4u);
  EXPECT_EQ(all.maps[0], two_structures_chi(l, "A"));
  EXPECT_EQ(*find_centers(*rel), all.maps[0]);
  EXPECT_TRUE(std::is_sorted(all.maps.begin(), all.maps.end()));

  const auto capped = enumerate_centers(*rel, 2);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.maps.size(), 2u);
}

TEST(Centers, InvalidMapsAreReported) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  CenterMap outside = two_structures_chi(l, "*");
  const Report r = validate_centers(*rel, outside);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.find("in_component")->passed);

  std::vector<Element> v = two_structures_chi(l, "C").values();
  v[l.index_of("B")] = l.index_of("B");
  EXPECT_FALSE(validate_centers(*rel, CenterMap(v)).find("component_constant")->passed);
}

TEST(Centers, ForcedCenter) {
  auto rel = fixture_rel("forced");
  const auto& l = rel->lattice();
  const auto all = enumerate_centers(*rel);
  ASSERT_EQ(all.maps.size(), 1u);
  const CenterMap& chi = all.maps[0];
  EXPECT_EQ(chi(el(l, "U")), el(l, "C"));
  EXPECT_EQ(chi(el(l, "D'")), el(l, "C"));
  EXPECT_TRUE(compute_Jchi(*rel, chi).contains(pr(l, "U", "C")));
  EXPECT_TRUE(compute_Qchi(*rel, chi).contains(pr(l, "C", "D")));
}

TEST(Centers, JchiQchiOnTwoStructures) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  const CenterMap chi = two_structures_chi(l, "C");
  EXPECT_EQ(compute_Jchi(*rel, chi), rel->weq());
  EXPECT_EQ(compute_Qchi(*rel, chi).pairs(), testing::pairs_of(l, {{"0", "0"}, {"C", "C"}, {"*", "*"}}));
  EXPECT_EQ(compute_Wc_chi(*rel, chi), rel->weq());
}

TEST(Centers, Product) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  const CenterMap b = two_structures_chi(l, "B"), bp = two_structures_chi(l, "B'");
  EXPECT_EQ(product_centers(*rel, b, bp), two_structures_chi(l, "A"));
  EXPECT_EQ(product_centers(*rel, b, b), b);
  const CenterMap least = *find_centers(*rel);
  const CenterMap c = two_structures_chi(l, "C");
  const CenterMap p = product_centers(*rel, least, c);
  for (Element a = 0; a < l.size(); ++a) {
    EXPECT_TRUE(l.leq(p(a), least(a)));
    EXPECT_TRUE(l.leq(p(a), c(a)));
  }
}

TEST(Centers, RequiresStrongTwoOfThree) {
  try {
    find_centers(*fixture_rel("s2of3-fail"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::S2OF3Failed);
  }
}

TEST(Centers, InvariantsOnFixtures) {
  for (const char* name : {"two-structures", "forced", "trunc-2", "chain-3"}) {
    auto rel = fixture_rel(name);
    for (const CenterMap& chi : enumerate_centers(*rel).maps) {
      const Report r = center_invariants(*rel, chi);
      EXPECT_TRUE(r.passed()) << name << ": " << r.first_failure()->name;
    }
  }
}

}  // namespace
}  // namespace posetmc
