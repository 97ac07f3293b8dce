#include "mosaics/design.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "mosaics/construct.hpp"
#include "fixtures.hpp"

using mosaics::binomial;
using mosaics::Design;
using mosaics::DesignParams;
using mosaics::derive_params;

namespace {

// Fano plane: development of the difference set {0, 1, 3} mod 7.
Design fano() {
  std::vector<std::vector<int>> blocks;
  for (int s = 0; s < 7; ++s)
    blocks.push_back({s % 7, (s + 1) % 7, (s + 3) % 7});
  return Design::from_point_lists(7, blocks, derive_params(2, 7, 3, 1));
}

}  // namespace

TEST(Design, Binomial) {
  EXPECT_EQ(binomial(7, 2), 21);
  EXPECT_EQ(binomial(31, 3), 4495);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 5), 1);
  EXPECT_EQ(binomial(4, 7), 0);
  EXPECT_EQ(binomial(52, 26), 495918532948104LL);
  EXPECT_THROW(binomial(80, 40), mosaics::Error);
}

TEST(Design, DeriveParams) {
  DesignParams p = derive_params(2, 7, 3, 1);
  EXPECT_EQ(*p.b, 7);
  EXPECT_EQ(*p.r, 3);
  p = derive_params(2, 15, 3, 1);
  EXPECT_EQ(*p.b, 35);
  EXPECT_EQ(*p.r, 7);
  p = derive_params(2, 9, 3, 1);
  EXPECT_EQ(*p.b, 12);
  EXPECT_EQ(*p.r, 4);
  p = derive_params(2, 16, 4, 1);
  EXPECT_EQ(*p.b, 20);
  EXPECT_EQ(*p.r, 5);
  p = derive_params(2, 31, 15, 7);
  EXPECT_EQ(*p.b, 31);
  EXPECT_EQ(*p.r, 15);
  // C(8,2)/C(3,2) = 28/3 is not integral.
  EXPECT_THROW(derive_params(2, 8, 3, 1), mosaics::NonIntegralParameters);
}

TEST(Design, VerifyFano) {
  Design d = fano();
  mosaics::DesignCheck c = mosaics::verify_design(d, 2, 1);
  EXPECT_TRUE(c.ok) << c.message;
  // Also a 1-design with r = 3 and a 0-design with b = 7.
  EXPECT_TRUE(mosaics::verify_design(d, 1, 3).ok);
  EXPECT_TRUE(mosaics::verify_design(d, 0, 7).ok);
  // Wrong lambda fails with a witness.
  mosaics::DesignCheck bad = mosaics::verify_design(d, 2, 2);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness_subset.has_value());
  EXPECT_EQ(bad.witness_count, 1);
}

TEST(Design, DuplicatedPointIsRejected) {
  // A repeated point inside a block collapses in the set representation,
  // so the block size no longer matches.
  std::vector<std::vector<int>> blocks;
  for (int s = 0; s < 7; ++s)
    blocks.push_back({s % 7, (s + 1) % 7, (s + 3) % 7});
  blocks[0] = {0, 0, 1};
  Design d = Design::from_point_lists(7, blocks, derive_params(2, 7, 3, 1));
  mosaics::DesignCheck c = mosaics::verify_design(d, 2, 1);
  EXPECT_FALSE(c.ok);
  EXPECT_NE(c.message.find("size"), std::string::npos);
}

TEST(Design, MissingBlockFails) {
  Design d = fano();
  std::vector<mosaics::BitVec> blocks = d.blocks();
  blocks.pop_back();
  Design broken(7, blocks, d.declared());
  mosaics::DesignCheck c = mosaics::verify_design(broken, 2, 1);
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.witness_subset.has_value());
  EXPECT_EQ(*c.witness_count, 0);
}

TEST(Design, OutOfRangePointThrows) {
  EXPECT_THROW(Design::from_point_lists(7, {{0, 1, 7}}), mosaics::Error);
  EXPECT_THROW(Design::from_point_lists(7, {{-1, 1, 2}}), mosaics::Error);
}

TEST(Design, Complement) {
  Design d = fano();
  Design c = mosaics::complement(d);
  ASSERT_TRUE(c.declared().has_value());
  EXPECT_EQ(c.declared()->t, 2);
  EXPECT_EQ(c.declared()->k, 4);
  EXPECT_EQ(c.declared()->lambda, 2);  // b - 2r + lambda = 7 - 6 + 1
  EXPECT_EQ(*c.declared()->b, 7);
  EXPECT_EQ(*c.declared()->r, 4);
  EXPECT_TRUE(mosaics::verify_design(c, 2, 2).ok);
  // Complementation is an involution on the blocks.
  EXPECT_TRUE(mosaics::complement(c).same_blocks(d));
}

TEST(Design, SameBlocksIsMultisetEquality) {
  Design d = fano();
  std::vector<mosaics::BitVec> shuffled = d.blocks();
  std::rotate(shuffled.begin(), shuffled.begin() + 3, shuffled.end());
  EXPECT_TRUE(Design(7, shuffled).same_blocks(d));
  std::vector<mosaics::BitVec> doubled = d.blocks();
  doubled[1] = doubled[0];
  EXPECT_FALSE(Design(7, doubled).same_blocks(d));
}

TEST(Design, KirkmanFixture) {
  auto [d, res] = mosaics::kirkman_15_fixture();
  EXPECT_EQ(d.v(), 15);
  EXPECT_EQ(d.b(), 35);
  EXPECT_TRUE(mosaics::verify_design(d, 2, 1).ok);
  EXPECT_TRUE(mosaics::is_resolution(d, res));
  EXPECT_EQ(res.classes.size(), 7u);
  // Blocks agree with the frozen fixture table.
  auto lists = d.point_lists();
  for (int i = 0; i < 35; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(lists[static_cast<size_t>(i)][static_cast<size_t>(j)],
                fixtures::kKirkmanBlocks[i][j]);
}

TEST(Design, FindResolution) {
  auto [d, res] = mosaics::kirkman_15_fixture();
  std::optional<mosaics::Resolution> found = mosaics::find_resolution(d);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(mosaics::is_resolution(d, *found));
  // The deterministic search seeds classes with the lowest unused block, so
  // with class-ordered input it recovers the canonical classes.
  EXPECT_EQ(found->classes, res.classes);
  // The Fano plane is not resolvable (3 does not divide 7).
  EXPECT_FALSE(mosaics::find_resolution(fano()).has_value());
}

TEST(Design, IsResolutionRejectsBadPartitions) {
  auto [d, res] = mosaics::kirkman_15_fixture();
  mosaics::Resolution bad = res;
  std::swap(bad.classes[0][0], bad.classes[1][0]);  // breaks disjointness
  EXPECT_FALSE(mosaics::is_resolution(d, bad));
  bad = res;
  bad.classes[0][0] = bad.classes[0][1];  // duplicate block index
  EXPECT_FALSE(mosaics::is_resolution(d, bad));
  bad = res;
  bad.classes.pop_back();  // not all blocks used
  EXPECT_FALSE(mosaics::is_resolution(d, bad));
}

TEST(Design, IncidenceMatrixRoundTrip) {
  auto [d, res] = mosaics::kirkman_15_fixture();
  auto m = mosaics::incidence_matrix(d);
  ASSERT_EQ(m.size(), 15u);
  ASSERT_EQ(m.front().size(), 35u);
  // Row sums r = 7, column sums k = 3.
  for (const auto& row : m) {
    int sum = 0;
    for (uint8_t x : row) sum += x;
    EXPECT_EQ(sum, 7);
  }
  Design back = mosaics::design_from_matrix(m, d.declared());
  EXPECT_TRUE(back.same_blocks(d));
  // Block order is preserved exactly.
  EXPECT_EQ(back.blocks(), d.blocks());
}

TEST(Design, VerifyZeroLambda) {
  // Singletons form a 2-(v,1,0) design: no pair is ever covered.
  std::vector<std::vector<int>> singles;
  for (int i = 0; i < 5; ++i) singles.push_back({i});
  Design d = Design::from_point_lists(5, singles);
  EXPECT_TRUE(mosaics::verify_design(d, 2, 0).ok);
  EXPECT_TRUE(mosaics::verify_design(d, 1, 1).ok);
  // Pair blocks break lambda = 0 with a covered-pair witness.
  std::vector<std::vector<int>> pairs;
  for (int i = 0; i < 5; ++i) pairs.push_back({i, (i + 1) % 5});
  mosaics::DesignCheck c =
      mosaics::verify_design(Design::from_point_lists(5, pairs), 2, 0);
  EXPECT_FALSE(c.ok);
  ASSERT_TRUE(c.witness_subset.has_value());
  EXPECT_EQ(*c.witness_count, 1);
}
