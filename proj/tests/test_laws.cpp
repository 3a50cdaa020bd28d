#include <gtest/gtest.h>

#include "laws.hpp"

namespace {

void expect_clean(const laws::Outcome& o, std::size_t min_cases) {
  EXPECT_GE(o.cases, min_cases) << o.name;
  EXPECT_EQ(o.failures, 0u) << o.name << ": " << o.first_failure;
}

}  // namespace

TEST(Laws, GaloisBiconditional) { expect_clean(laws::galois(600, 101), 500); }
TEST(Laws, LOfIncreasingIsStable) { expect_clean(laws::l_stable(600, 102), 500); }
TEST(Laws, LrTwoPaths) { expect_clean(laws::lr_two_path(500, 103), 500); }
TEST(Laws, ClosureOperator) { expect_clean(laws::closure_laws(600, 104), 500); }
TEST(Laws, ComplexAlgebraIsBoundedLattice) { expect_clean(laws::complex_algebra_valid(500, 105), 500); }
TEST(Laws, BoundedMorphismsCompose) { expect_clean(laws::bm_composition(600, 106), 500); }
TEST(Laws, ExtendToMaximal) { expect_clean(laws::extension(1000, 107), 1000); }

TEST(Laws, DifferentSeedsStillPass) {
  expect_clean(laws::galois(500, 9001), 500);
  expect_clean(laws::extension(500, 9002), 500);
}
