#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace polarity;
using testutil::S;

namespace {

const std::vector<std::string> kXYZ{"x", "y", "z"};

// Stable sets of the three-point frame, ascending-mask:
// 0 {}, 1 {y}, 2 {x,y}, 3 {z}, 4 X.
constexpr std::size_t kEmpty = 0, kY = 1, kXY = 2, kZ = 3, kAll = 4;

}  // namespace

TEST(KMap, ThreePointAtX) {
  auto emb = k_map(counterexample_source());
  ASSERT_EQ(emb.images.size(), 3u);
  EXPECT_EQ(emb.images[0].k1, from_indices(5, {kXY, kAll}));
  EXPECT_EQ(emb.images[0].k2, from_indices(5, {kEmpty, kY}));
}

TEST(KMap, ThreePointAtZ) {
  auto emb = k_map(counterexample_source());
  EXPECT_EQ(emb.images[2].k1, from_indices(5, {kZ, kAll}));
  EXPECT_EQ(emb.images[2].k2, from_indices(5, {kEmpty, kY, kXY}));
}

TEST(KMap, OnePoint) {
  auto emb = k_map(one_point_frame());
  ASSERT_EQ(emb.images.size(), 1u);
  EXPECT_EQ(emb.images[0].k1, from_indices(2, {1}));
  EXPECT_EQ(emb.images[0].k2, from_indices(2, {0}));
}

TEST(KMap, RefusesNonLatticeFrame) {
  auto X = build_frame({"x", "y"}, {{"x", "y"}}, {});
  auto e = testutil::error_of([&] { k_map(X); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::NotALatticeFrame);
  EXPECT_EQ(e->witness(), (std::vector<std::string>{"LF2", "y", "x"}));
}

TEST(Characterize, ThreePoint) {
  auto X = counterexample_source();
  auto emb = k_map(X);
  EXPECT_EQ(characterize_k1(emb, 0), S(kXYZ, {"x", "y"}));
  EXPECT_EQ(w_set(X, 0), S(kXYZ, {"y"}));
  EXPECT_EQ(characterize_k2(emb, 0), S(kXYZ, {"y"}));
  EXPECT_EQ(characterize_k1(X, 2), S(kXYZ, {"z"}));
  EXPECT_EQ(w_set(X, 2), S(kXYZ, {"x", "y"}));
  EXPECT_EQ(characterize_k2(X, 2), S(kXYZ, {"x", "y"}));
}

TEST(Characterize, TamperedImageIsMismatch) {
  auto X = counterexample_source();
  auto emb = k_map(X);
  emb.images[0].k1.set(kZ);
  auto e = testutil::error_of([&] { characterize_k1(emb, 0); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::CharacterizationMismatch);
  emb = k_map(X);
  emb.images[2].k2.reset(kXY);
  e = testutil::error_of([&] { characterize_k2(emb, 2); });
  ASSERT_TRUE(e);
  EXPECT_EQ(e->kind(), ErrorKind::CharacterizationMismatch);
}

TEST(VerifyFrameEmbedding, ThreePointAndCanonicalFrames) {
  auto X = counterexample_source();
  EXPECT_TRUE(verify_frame_embedding(X, k_map(X)).all_pass());
  auto cf = canonical_frame(chain_lattice(3));
  EXPECT_TRUE(verify_frame_embedding(cf.frame, k_map(cf.frame)).all_pass());
}

TEST(VerifyFrameEmbedding, DetectsCollapsedImages) {
  auto X = counterexample_source();
  auto emb = k_map(X);
  emb.images[1] = emb.images[0];
  emb.images[1].point = 1;
  auto rep = verify_frame_embedding(X, emb);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_FALSE(rep.injective.pass);
  EXPECT_EQ(rep.injective.witness, (std::vector<std::string>{"x", "y"}));
}

TEST(VerifyFrameEmbedding, DetectsNonMaximalImage) {
  auto X = counterexample_source();
  auto emb = k_map(X);
  emb.images[0].k2.reset(kY);
  auto rep = verify_frame_embedding(X, emb);
  EXPECT_FALSE(rep.maximal_pairs.pass);
  EXPECT_EQ(rep.maximal_pairs.witness.front(), "x");
}

TEST(VerifyFrameEmbedding, ReflectsLeq1OnRandomLatticeFrames) {
  for (const auto& X : generate_frames(5, 50, 11, true)) {
    auto rep = verify_frame_embedding(X, k_map(X));
    EXPECT_TRUE(rep.all_pass());
    EXPECT_TRUE(rep.reflects_leq1.pass);
  }
}

TEST(VerifyLatticeEmbedding, IdentityPassesConstantFails) {
  auto L = boolean_square();
  EXPECT_TRUE(verify_lattice_embedding({0, 1, 2, 3}, L, L).all_pass());
  auto rep = verify_lattice_embedding({0, 0, 0, 0}, L, L);
  EXPECT_FALSE(rep.injective.pass);
  EXPECT_EQ(rep.injective.witness, (std::vector<std::string>{"0", "a"}));
  EXPECT_FALSE(rep.preserves_top.pass);
}

TEST(VerifyLatticeEmbedding, ChainIntoSquare) {
  // 0 < a < 1 sent to 0 < a < 1 in the square is an embedding.
  EXPECT_TRUE(verify_lattice_embedding({0, 1, 3}, chain_lattice(3), boolean_square()).all_pass());
}

TEST(LatticeIsomorphic, Examples) {
  auto sq = build_lattice({"bot", "p", "q", "top"},
                          {{"bot", "q"}, {"bot", "p"}, {"q", "top"}, {"p", "top"}});
  auto f = lattice_isomorphic(boolean_square(), sq);
  ASSERT_TRUE(f);
  EXPECT_TRUE(verify_lattice_embedding(*f, boolean_square(), sq).all_pass());
  EXPECT_FALSE(lattice_isomorphic(pentagon_n5(), diamond_m3()));
  EXPECT_FALSE(lattice_isomorphic(chain_lattice(4), boolean_square()));
  EXPECT_TRUE(lattice_isomorphic(complex_algebra(counterexample_source()).lattice, pentagon_n5()));
}

TEST(LatticeIsomorphic, DistinguishesAllClassesUpToSix) {
  auto ls = lattices_up_to(6);
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = 0; j < ls.size(); ++j)
      EXPECT_EQ(lattice_isomorphic(ls[i], ls[j]).has_value(), i == j);
}

TEST(Roundtrip, ThreeChain) {
  auto rt = canonical_extension_roundtrip(chain_lattice(3));
  EXPECT_TRUE(rt.all_pass());
  EXPECT_EQ(rt.algebra.family.size(), 3u);
  EXPECT_EQ(rt.h, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Roundtrip, BooleanSquareAndM3) {
  auto sq = canonical_extension_roundtrip(boolean_square());
  EXPECT_TRUE(sq.all_pass());
  EXPECT_EQ(sq.algebra.family.size(), 4u);
  auto m3 = canonical_extension_roundtrip(diamond_m3());
  EXPECT_TRUE(m3.all_pass());
  EXPECT_EQ(m3.canonical.points.size(), 6u);
}

TEST(Roundtrip, EveryLatticeUpToSix) {
  for (const auto& L : lattices_up_to(6)) EXPECT_TRUE(canonical_extension_roundtrip(L).all_pass());
}
