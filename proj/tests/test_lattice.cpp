#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace polarity;
using testutil::mask_of;
using testutil::masks_of;
using testutil::S;

namespace {

const std::vector<std::string> kB4{"0", "a", "b", "1"};
const std::vector<std::string> kM3{"0", "a", "b", "c", "1"};

}  // namespace

TEST(BuildLattice, TwoChain) {
  auto L = build_lattice({"0", "1"}, {{"0", "1"}});
  EXPECT_EQ(L.size(), 2u);
  EXPECT_EQ(L.label(L.bottom()), "0");
  EXPECT_EQ(L.label(L.top()), "1");
  EXPECT_EQ(join(L, 0, 1), 1u);
  EXPECT_EQ(meet(L, 0, 1), 0u);
}

TEST(BuildLattice, BooleanSquare) {
  auto L = boolean_square();
  EXPECT_EQ(L.labels(), kB4);
  EXPECT_EQ(join(L, 1, 2), 3u);
  EXPECT_EQ(meet(L, 1, 2), 0u);
}

TEST(BuildLattice, M3AgreesWithBoundScanOracle) {
  auto L = diamond_m3();
  auto leq = testutil::matrix_of(L.order());
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      EXPECT_EQ(L.join(a, b), *oracle::lub(leq, a, b));
      EXPECT_EQ(L.meet(a, b), *oracle::glb(leq, a, b));
    }
  // Frozen from the oracle: any two atoms join to 1 and meet to 0.
  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      if (a != b) {
        EXPECT_EQ(L.join(a, b), 4u);
        EXPECT_EQ(L.meet(a, b), 0u);
      }
}

TEST(BuildLattice, NoBoundsIsNotALattice) {
  auto e = testutil::error_of([] { build_lattice({"a", "b"}, {}); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::NotALattice);
  EXPECT_EQ(e->witness(), (std::vector<std::string>{"a", "b"}));
}

TEST(BuildLattice, CycleIsNotAntisymmetric) {
  auto e = testutil::error_of(
      [] { build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}}); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::NotAntisymmetric);
  EXPECT_EQ(e->witness(), (std::vector<std::string>{"a", "b"}));
}

TEST(BuildLattice, MissingJoinWitness) {
  // a, b both below c and d: no least upper bound.
  auto e = testutil::error_of([] {
    build_lattice({"0", "a", "b", "c", "d", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"},
                   {"c", "1"}, {"d", "1"}});
  });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::NotALattice);
  EXPECT_EQ(e->witness(), (std::vector<std::string>{"a", "b"}));
}

TEST(BuildLattice, RejectsDuplicateAndUnknownLabels) {
  EXPECT_EQ(testutil::error_of([] { build_lattice({"a", "a"}, {}); })->kind(),
            ErrorKind::InvalidArgument);
  EXPECT_EQ(testutil::error_of([] { build_lattice({"a"}, {{"a", "z"}}); })->kind(),
            ErrorKind::InvalidArgument);
}

TEST(BuildLattice, SizeCap) {
  auto e = testutil::error_of([] { chain_lattice(5); });
  EXPECT_FALSE(e);
  e = testutil::error_of([] { build_lattice({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}}, 2); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::CarrierTooLarge);
}

TEST(BuildLattice, SingletonIsBounded) {
  auto L = build_lattice({"0"}, {});
  EXPECT_EQ(L.bottom(), L.top());
  EXPECT_TRUE(enumerate_filters(L).empty());
  EXPECT_TRUE(enumerate_ideals(L).empty());
}

TEST(BuildLattice, IdempotentOnItsOwnOrder) {
  for (const auto& [name, L] : builtin_lattices()) {
    std::vector<LabelPair> full;
    for (auto [a, b] : L.order().pairs()) full.emplace_back(L.label(a), L.label(b));
    EXPECT_EQ(build_lattice(L.labels(), full), L) << name;
  }
}

TEST(BuildLattice, TableLawsOnExhaustiveCorpus) {
  for (const auto& L : lattices_up_to(6)) {
    const std::size_t n = L.size();
    for (std::size_t a = 0; a < n; ++a) {
      EXPECT_EQ(L.join(a, a), a);
      EXPECT_EQ(L.meet(a, a), a);
      EXPECT_TRUE(L.leq(L.bottom(), a));
      EXPECT_TRUE(L.leq(a, L.top()));
      for (std::size_t b = 0; b < n; ++b) {
        EXPECT_EQ(L.join(a, b), L.join(b, a));
        EXPECT_EQ(L.meet(a, b), L.meet(b, a));
        EXPECT_EQ(L.meet(a, L.join(a, b)), a);
        EXPECT_EQ(L.join(a, L.meet(a, b)), a);
        for (std::size_t c = 0; c < n; ++c) {
          EXPECT_EQ(L.join(L.join(a, b), c), L.join(a, L.join(b, c)));
          EXPECT_EQ(L.meet(L.meet(a, b), c), L.meet(a, L.meet(b, c)));
        }
      }
    }
  }
}

TEST(Filters, TwoChain) {
  auto L = chain_lattice(2);
  EXPECT_EQ(masks_of(enumerate_filters(L)), (std::vector<std::uint64_t>{0b10}));
  EXPECT_EQ(masks_of(enumerate_ideals(L)), (std::vector<std::uint64_t>{0b01}));
}

TEST(Filters, BooleanSquareMatchesFrozenBruteForce) {
  auto L = boolean_square();
  // {1}, {a,1}, {b,1} and {0}, {0,a}, {0,b}.
  EXPECT_EQ(masks_of(enumerate_filters(L)), (std::vector<std::uint64_t>{8, 10, 12}));
  EXPECT_EQ(masks_of(enumerate_ideals(L)), (std::vector<std::uint64_t>{1, 3, 5}));
  EXPECT_EQ(enumerate_filters(L)[1], S(kB4, {"a", "1"}));
}

TEST(Filters, ThreeChain) {
  auto L = chain_lattice(3);
  EXPECT_EQ(masks_of(enumerate_filters(L)), (std::vector<std::uint64_t>{4, 6}));
  EXPECT_EQ(masks_of(enumerate_ideals(L)), (std::vector<std::uint64_t>{1, 3}));
}

TEST(Filters, AgreeWithOracleOnAllSmallLattices) {
  for (const auto& L : generate_lattices(6, GenerationMode::Exhaustive)) {
    auto leq = testutil::matrix_of(L.order());
    EXPECT_EQ(masks_of(enumerate_filters(L)), oracle::filters(leq));
    EXPECT_EQ(masks_of(enumerate_ideals(L)), oracle::filters(leq, true));
  }
}

TEST(Filters, GrowthStrategyMatchesBruteForce) {
  Caps growth;
  growth.filter_brute_force = 0;
  for (const auto& L : lattices_up_to(7)) {
    EXPECT_EQ(enumerate_filters(L, growth), enumerate_filters(L));
    EXPECT_EQ(enumerate_ideals(L, growth), enumerate_ideals(L));
  }
}

TEST(Filters, ValidatorInvariants) {
  for (const auto& L : lattices_up_to(6))
    for (const auto& F : enumerate_filters(L)) {
      EXPECT_FALSE(F.test(L.bottom()));
      EXPECT_TRUE(F.test(L.top()));
      for (auto a : members(F))
        for (std::size_t b = 0; b < L.size(); ++b) {
          if (F.test(b)) {
            EXPECT_TRUE(F.test(L.meet(a, b)));
          }
          if (L.leq(a, b)) {
            EXPECT_TRUE(F.test(b));
          }
        }
    }
}

TEST(PrincipalSets, Examples) {
  auto L = boolean_square();
  EXPECT_EQ(principal_filter(L, 1), S(kB4, {"a", "1"}));
  EXPECT_EQ(principal_filter(L, L.bottom()), full_subset(4));
  EXPECT_EQ(principal_ideal(diamond_m3(), 3), S(kM3, {"0", "c"}));
}

TEST(GeneratedFilter, ClosesUnderMeetAndUp) {
  auto L = diamond_m3();
  EXPECT_EQ(generated_filter(L, S(kM3, {"a", "b"})), full_subset(5));
  EXPECT_EQ(generated_filter(L, S(kM3, {"a"})), S(kM3, {"a", "1"}));
  EXPECT_EQ(generated_ideal(L, S(kM3, {"a", "b"})), full_subset(5));
  EXPECT_EQ(generated_filter(L, empty_subset(5)), empty_subset(5));
}
