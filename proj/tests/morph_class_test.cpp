#include <gtest/gtest.h>

#include "helpers.hpp"
#include "posetmc/error.hpp"

namespace posetmc {
namespace {

using testing::cls;
using testing::pr;

TEST(MorphClass, FromPairsRejectsNonMorphisms) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  std::vector<Pair> bad{pr(l, "B", "B'")};
  try {
    MorphClass::from_pairs(l, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotComparable);
    EXPECT_EQ(e.witness(), (std::vector<Element>{bad[0].src, bad[0].dst}));
  }
}

TEST(MorphClass, IdentitiesAndAll) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  auto ids = MorphClass::identities(l);
  EXPECT_EQ(ids.count(), l.size());
  EXPECT_TRUE(ids.contains_identities());
  EXPECT_TRUE(ids.non_identity_pairs().empty());
  auto all = MorphClass::all(l);
  EXPECT_EQ(all.pairs(), l.comparable_pairs());
  EXPECT_TRUE(ids.subset_of(all));
  EXPECT_FALSE(all.subset_of(ids));
}

TEST(MorphClass, SetAlgebra) {
  auto rel = fixture_rel("two-structures");
  const auto& l = rel->lattice();
  auto a = cls(l, {{"A", "B"}, {"A", "C"}});
  auto b = cls(l, {{"A", "C"}, {"B", "C"}});
  EXPECT_EQ((a & b), cls(l, {{"A", "C"}}));
  EXPECT_EQ((a | b), cls(l, {{"A", "B"}, {"A", "C"}, {"B", "C"}}));
  EXPECT_EQ((a - b).pairs(), std::vector<Pair>{pr(l, "A", "B")});
  auto c = MorphClass::empty(l);
  EXPECT_FALSE(c.contains_identities());
  c.add_identities();
  EXPECT_EQ(c, MorphClass::identities(l));
  c.insert(pr(l, "0", "*"));
  c.erase(pr(l, "0", "*"));
  EXPECT_EQ(c, MorphClass::identities(l));
}

TEST(MorphClass, PairsAreSorted) {
  auto rel = fixture_rel("forced");
  auto ps = rel->weq().pairs();
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
  EXPECT_EQ(rel->weq().non_identity_pairs().size(), 12u);
}

}  // namespace
}  // namespace posetmc
