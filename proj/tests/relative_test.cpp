#include <gtest/gtest.h>

#include "helpers.hpp"
#include "posetmc/centers.hpp"
#include "posetmc/error.hpp"
#include "posetmc/recognize.hpp"

namespace posetmc {
namespace {

using testing::elems;
using testing::pairs_of;

std::shared_ptr<const FiniteLattice> two_structures_lattice() { return fixture_rel("two-structures")->lattice_ptr(); }

TEST(Relative, IdentitiesOnly) {
  auto l = two_structures_lattice();
  const auto ids = MorphClass::identities(*l).pairs();
  const RelStruct r = validate_relative(l, ids);
  EXPECT_EQ(r.components().size(), l->size());
  EXPECT_EQ(r.wc(), r.weq());
  EXPECT_EQ(r.wf(), r.weq());
  EXPECT_TRUE(check_s2of3(r).passed);
  EXPECT_TRUE(check_cw_factorization(r).passed);
}

TEST(Relative, TwoStructuresComponents) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  ASSERT_EQ(rel->components().size(), 3u);
  EXPECT_EQ(rel->components()[0], elems(l, {"0"}));
  EXPECT_EQ(rel->components()[1], elems(l, {"A", "B", "B'", "C"}));
  EXPECT_EQ(rel->components()[2], elems(l, {"*"}));
  EXPECT_EQ(rel->component_of(l.index_of("B'")), 1u);
}

TEST(Relative, MissingIdentitiesNeedsOptIn) {
  auto l = two_structures_lattice();
  const auto w = pairs_of(*l, {{"A", "B"}});
  try {
    validate_relative(l, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingIdentities);
  }
  EXPECT_NO_THROW(validate_relative(l, w, {true}));
}

TEST(Relative, CompositionWitness) {
  auto l = two_structures_lattice();
  const auto w = pairs_of(*l, {{"A", "B"}, {"B", "C"}});
  try {
    validate_relative(l, w, {true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCompositionClosed);
    EXPECT_EQ(e.witness(), elems(*l, {"A", "C"}));
  }
}

TEST(Relative, NonMorphismRejected) {
  auto l = two_structures_lattice();
  const auto w = pairs_of(*l, {{"B", "B'"}});
  try {
    validate_relative(l, w, {true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotComparable);
  }
}

TEST(Relative, StrongTwoOfThree) {
  EXPECT_TRUE(check_s2of3(*fixture_rel("two-structures")).passed);
  auto bad = fixture_rel("s2of3-fail");
  const Check c = check_s2of3(*bad);
  EXPECT_FALSE(c.passed);
  EXPECT_EQ(c.witness, elems(bad->lattice(), {"a", "b", "c"}));
}

TEST(Relative, WcAndWf) {
  auto two = fixture_rel("two-structures");
  EXPECT_EQ(two->wc(), two->weq());
  EXPECT_EQ(two->wf(), two->weq());
  EXPECT_EQ(compute_Wc(two->lattice(), two->weq()), two->wc());
  EXPECT_EQ(compute_Wf(two->lattice(), two->weq()), two->wf());
}

TEST(Relative, TruncationWcDropsGadgetMorphisms) {
  // Pushing U1 -> E1 out along U1 -> A0 gives A0 -> top, which is not in W.
  auto rel = fixture_rel("trunc-1");
  const auto& l = rel->lattice();
  const MorphClass dropped = testing::cls(l, {{"C1", "D1"}, {"C1", "D1'"}, {"U1", "D1"}, {"U1", "D1'"}, {"U1", "E1"},
                                              {"U1'", "D1"}, {"U1'", "D1'"}, {"U1'", "E1'"}});
  EXPECT_EQ(rel->wc(), (rel->weq() - dropped) | MorphClass::identities(l));
}

TEST(Relative, CwFactorization) {
  EXPECT_TRUE(check_cw_factorization(*fixture_rel("two-structures")).passed);
  auto rel = testing::cw_fail();
  EXPECT_TRUE(check_s2of3(*rel).passed);
  const Check c = check_cw_factorization(*rel);
  EXPECT_FALSE(c.passed);
  EXPECT_EQ(c.witness, elems(rel->lattice(), {"e0", "e6"}));
}

TEST(Recognize, Fixtures) {
  for (const char* name : {"two-structures", "forced", "trunc-1", "trunc-2", "chain-4"}) {
    const Recognition r = recognize_finite(fixture_rel(name));
    EXPECT_TRUE(r.yes) << name;
    ASSERT_TRUE(r.terminal.has_value());
    EXPECT_TRUE(r.terminal->verified()) << name;
  }
}

TEST(Recognize, Failures) {
  auto bad = fixture_rel("s2of3-fail");
  const Recognition r = recognize_finite(bad);
  EXPECT_FALSE(r.yes);
  EXPECT_FALSE(r.terminal.has_value());
  ASSERT_NE(r.report.first_failure(), nullptr);
  EXPECT_EQ(r.report.first_failure()->name, "s2of3");
  EXPECT_EQ(r.report.first_failure()->witness, elems(bad->lattice(), {"a", "b", "c"}));

  const Recognition cw = recognize_finite(testing::cw_fail());
  EXPECT_FALSE(cw.yes);
  EXPECT_EQ(cw.report.first_failure()->name, "cw_factorization");
  EXPECT_FALSE(find_centers(*testing::cw_fail()).has_value());
}

}  // namespace
}  // namespace posetmc
