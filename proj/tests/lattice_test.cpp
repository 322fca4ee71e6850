#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "posetmc/error.hpp"
#include "posetmc/oracle.hpp"

namespace posetmc {
namespace {

using testing::el;
using testing::pr;

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

TEST(Lattice, TwoChain) {
  std::vector<LabelPair> rel{{"bot", "top"}};
  auto l = FiniteLattice::build({"bot", "top"}, rel);
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.join(0, 1), 1u);
  EXPECT_EQ(l.meet(0, 1), 0u);
  EXPECT_EQ(l.bottom(), 0u);
  EXPECT_EQ(l.top(), 1u);
}

TEST(Lattice, TwoStructuresJoinAndMeet) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  EXPECT_EQ(l.join(el(l, "B"), el(l, "B'")), el(l, "C"));
  EXPECT_EQ(l.meet(el(l, "B"), el(l, "B'")), el(l, "A"));
  EXPECT_EQ(l.bottom(), el(l, "0"));
  EXPECT_EQ(l.top(), el(l, "*"));
}

TEST(Lattice, TwoMinimalUpperBoundsIsNotALattice) {
  std::vector<LabelPair> rel{{"bot", "a"}, {"bot", "b"}, {"a", "c"}, {"a", "d"},
                             {"b", "c"}, {"b", "d"}, {"c", "top"}, {"d", "top"}};
  try {
    FiniteLattice::build({"bot", "a", "b", "c", "d", "top"}, rel);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotALattice);
    EXPECT_EQ(e.witness(), (std::vector<Element>{1, 2}));
  }
}

TEST(Lattice, RejectsMalformedOrders) {
  std::vector<LabelPair> cycle{{"a", "b"}, {"b", "a"}};
  EXPECT_EQ(kind_of([&] { FiniteLattice::build({"a", "b"}, cycle); }), ErrorKind::CycleDetected);
  std::vector<LabelPair> two_bottoms{{"a", "c"}, {"b", "c"}};
  EXPECT_EQ(kind_of([&] { FiniteLattice::build({"a", "b", "c"}, two_bottoms); }), ErrorKind::Unbounded);
  std::vector<LabelPair> none;
  EXPECT_EQ(kind_of([&] { FiniteLattice::build({}, none); }), ErrorKind::Unbounded);
  EXPECT_EQ(kind_of([&] { FiniteLattice::build({"a", "a"}, none); }), ErrorKind::DuplicateLabel);
  std::vector<LabelPair> unknown{{"a", "z"}};
  EXPECT_EQ(kind_of([&] { FiniteLattice::build({"a"}, unknown); }), ErrorKind::UnknownLabel);
  EXPECT_EQ(kind_of([&] { FiniteLattice::build({"a", "b", "c"}, none, 2); }), ErrorKind::TooLarge);
}

TEST(Lattice, SingletonIsALattice) {
  std::vector<LabelPair> none;
  auto l = FiniteLattice::build({"x"}, none);
  EXPECT_EQ(l.bottom(), l.top());
}

TEST(Lattice, JoinAllAndMeetAll) {
  auto two = fixture_rel("two-structures");
  const auto& l = two->lattice();
  std::vector<Element> single{el(l, "B")};
  EXPECT_EQ(join_all(l, single), el(l, "B"));
  std::vector<Element> bs{el(l, "B"), el(l, "B'")};
  EXPECT_EQ(join_all(l, bs), el(l, "C"));
  EXPECT_EQ(join_all(l, {}), l.bottom());
  EXPECT_EQ(meet_all(l, {}), l.top());

  auto forced = fixture_rel("forced");
  const auto& f = forced->lattice();
  std::vector<Element> ds{el(f, "D"), el(f, "D'")};
  EXPECT_EQ(meet_all(f, ds), el(f, "C"));
}

TEST(Lattice, PushoutAndPullback) {
  auto two = fixture_rel("two-structures");
  const auto& l = two->lattice();
  EXPECT_EQ(pushout_of(l, pr(l, "A", "B"), el(l, "A")), pr(l, "A", "B"));
  EXPECT_EQ(pushout_of(l, pr(l, "A", "B"), el(l, "B'")), pr(l, "B'", "C"));
  EXPECT_EQ(kind_of([&] { pushout_of(l, pr(l, "A", "B"), el(l, "0")); }), ErrorKind::NotComparable);

  auto forced = fixture_rel("forced");
  const auto& f = forced->lattice();
  EXPECT_EQ(pullback_of(f, pr(f, "C", "D"), el(f, "E")), pr(f, "U", "E"));
  EXPECT_EQ(kind_of([&] { pullback_of(f, pr(f, "C", "D"), el(f, "D'")); }), ErrorKind::NotComparable);
}

TEST(Lattice, CoversOfChain) {
  auto rel = fixture_rel("chain-3");
  const auto& l = rel->lattice();
  EXPECT_EQ(l.covers().size(), 4u);
  EXPECT_EQ(l.comparable_pairs().size(), 15u);
}

TEST(LatticeLaws, RandomLattices) {
  InstanceGen gen;
  gen.seed = 11;
  gen.max_elements = 9;
  InstanceStream stream(gen);
  for (int i = 0; i < 200; ++i) {
    auto rel = stream.next();
    const FiniteLattice& l = rel->lattice();
    const Element n = static_cast<Element>(l.size());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        EXPECT_EQ(l.leq(a, b), l.join(a, b) == b);
        EXPECT_EQ(l.leq(a, b), l.meet(a, b) == a);
        EXPECT_EQ(l.join(a, l.meet(a, b)), a);
        EXPECT_EQ(l.meet(a, l.join(a, b)), a);
        for (Element c = 0; c < n; ++c) {
          EXPECT_EQ(l.join(l.join(a, b), c), l.join(a, l.join(b, c)));
          EXPECT_EQ(l.meet(l.meet(a, b), c), l.meet(a, l.meet(b, c)));
        }
      }
  }
}

TEST(LatticeLaws, PushoutPasting) {
  InstanceGen gen;
  gen.seed = 12;
  InstanceStream stream(gen);
  for (int i = 0; i < 200; ++i) {
    auto rel = stream.next();
    const FiniteLattice& l = rel->lattice();
    for (const Pair& f : l.comparable_pairs())
      for (Element c = 0; c < l.size(); ++c) {
        if (!l.leq(f.src, c)) continue;
        const Pair g = pushout_of(l, f, c);
        for (Element d = 0; d < l.size(); ++d)
          if (l.leq(c, d)) EXPECT_EQ(pushout_of(l, g, d), pushout_of(l, f, l.join(c, d)));
      }
  }
}

}  // namespace
}  // namespace posetmc
