#include <gtest/gtest.h>

#include "helpers.hpp"
#include "posetmc/kernels.hpp"
#include "posetmc/oracle.hpp"

namespace posetmc {
namespace {

class KernelAgreement : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = kernels::max_threads();
    kernels::set_threads(GetParam());
  }
  void TearDown() override { kernels::set_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(KernelAgreement, SerialAndParallelMatch) {
  InstanceGen gen;
  gen.seed = 21;
  gen.max_elements = 12;
  gen.max_weq = 40;
  InstanceStream stream(gen);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    auto rel = stream.next();
    const FiniteLattice& l = rel->lattice();
    for (double density : {0.1, 0.4}) {
      const MorphClass s = testing::random_class(l, rng, density, false);
      const MorphClass t = testing::random_class(l, rng, density, true);
      EXPECT_EQ(kernels::reference::right_complement(l, s), kernels::parallel::right_complement(l, s));
      EXPECT_EQ(kernels::reference::left_complement(l, s), kernels::parallel::left_complement(l, s));
      EXPECT_EQ(kernels::reference::first_lift_failure(l, s, t), kernels::parallel::first_lift_failure(l, s, t));
      EXPECT_EQ(kernels::reference::first_two_of_three_failure(l, t),
                kernels::parallel::first_two_of_three_failure(l, t));
    }
    EXPECT_EQ(kernels::reference::first_two_of_three_failure(l, rel->weq()),
              kernels::parallel::first_two_of_three_failure(l, rel->weq()));
  }
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelAgreement, ::testing::Values(1, 2, 4));

TEST(Kernels, FixtureComplements) {
  for (const char* name : {"two-structures", "forced", "trunc-4"}) {
    auto rel = fixture_rel(name);
    const FiniteLattice& l = rel->lattice();
    EXPECT_EQ(kernels::reference::right_complement(l, rel->weq()), kernels::parallel::right_complement(l, rel->weq()));
    EXPECT_EQ(kernels::reference::left_complement(l, rel->weq()), kernels::parallel::left_complement(l, rel->weq()));
  }
}

TEST(Kernels, ThreadCountIsPositive) { EXPECT_GE(kernels::max_threads(), 1); }

}  // namespace
}  // namespace posetmc
