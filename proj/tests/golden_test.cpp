// Golden-file tests: serialized output is schema-stable, byte for byte.
// The files under tests/data/ are frozen; a mismatch means the on-disk
// format changed and callers parsing it would break.

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "mosaics/construct.hpp"
#include "mosaics/io.hpp"
#include "mosaics/mosaic.hpp"
#include "mosaics/qdesign.hpp"

namespace {

std::string data_file(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

TEST(Golden, MosaicJsonPaley7) {
  std::string expected = mosaics::read_file(data_file("paley7_mosaic.json"));
  EXPECT_EQ(mosaics::mosaic_to_json_string(mosaics::paley_mosaic(7)),
            expected);
  // The frozen bytes still parse into a verifying mosaic.
  mosaics::Mosaic m = mosaics::mosaic_from_json_string(expected);
  EXPECT_TRUE(mosaics::verify_mosaic(m).ok);
}

TEST(Golden, MosaicJsonAffine4) {
  std::string expected = mosaics::read_file(data_file("affine4_mosaic.json"));
  EXPECT_EQ(mosaics::mosaic_to_json_string(mosaics::affine_plane_mosaic(4)),
            expected);
  mosaics::Mosaic m = mosaics::mosaic_from_json_string(expected);
  EXPECT_TRUE(mosaics::verify_mosaic(m).ok);
  EXPECT_EQ(m.scheme().labels(), (std::vector<int>{0, 1, 2, 3}));
}

TEST(Golden, MosaicTextPaley7) {
  std::string expected = mosaics::read_file(data_file("paley7_mosaic.txt"));
  EXPECT_EQ(mosaics::mosaic_to_text(mosaics::paley_mosaic(7)), expected);
}

TEST(Golden, QDesignTextLines3) {
  // The design of all seven lines of GF(2)^3, a 1-(3,1,1;2).
  std::vector<mosaics::Subspace> lines;
  for (uint64_t x = 1; x <= 7; ++x) {
    std::vector<uint64_t> gen{x};
    lines.push_back(mosaics::Subspace::span(3, gen));
  }
  mosaics::DesignParams p;
  p.t = 1;
  p.v = 3;
  p.k = 1;
  p.lambda = 1;
  p.b = 7;
  p.r = 7;
  mosaics::QDesign d(3, lines, p);
  std::string expected = mosaics::read_file(data_file("lines_gf2_3.qd"));
  EXPECT_EQ(mosaics::qdesign_to_text(d), expected);
  mosaics::QDesign back = mosaics::qdesign_from_text(expected);
  EXPECT_TRUE(mosaics::verify_qdesign(back, 1, 1).ok);
}

}  // namespace
