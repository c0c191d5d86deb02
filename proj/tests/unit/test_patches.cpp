#include <doctest.h>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/patches.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace fakepolisher;

TEST_CASE("non-overlapping tiling of a 64x64 image") {
  const Image img = testing::random_image(64, 64, 1, 1);
  const auto patches = extract_patches(img, make_geometry(img, 8, 8));
  CHECK(patches.rows() == 64);
  CHECK(patches.cols() == 64);
}

TEST_CASE("single patch equals the vectorized image") {
  const Image img = testing::random_image(8, 8, 1, 2);
  const auto patches = extract_patches(img, make_geometry(img, 8, 8));
  REQUIRE(patches.cols() == 1);
  CHECK(patches.col(0) == vectorize(img));
}

TEST_CASE("final origin is clamped to the image edge") {
  const Image img = testing::random_image(10, 10, 1, 3);
  const auto g = make_geometry(img, 8, 4);
  CHECK(g.row_origins() == std::vector<int>{0, 2});
  CHECK(g.col_origins() == std::vector<int>{0, 2});
  CHECK(extract_patches(img, g).cols() == 4);
}

TEST_CASE("patch columns are channel-interleaved and row-major") {
  Image img(4, 4, 3);
  for (std::size_t i = 0; i < img.size(); ++i) img.values()[i] = static_cast<double>(i) / 100.0;
  const auto patches = extract_patches(img, make_geometry(img, 2, 2));
  // Patch 1 starts at (0, 2): pixel (0,2) ch0..2, (0,3), (1,2), (1,3).
  CHECK(patches(0, 1) == img.at(0, 2, 0));
  CHECK(patches(2, 1) == img.at(0, 2, 2));
  CHECK(patches(3, 1) == img.at(0, 3, 0));
  CHECK(patches(6, 1) == img.at(1, 2, 0));
  CHECK(patches(11, 1) == img.at(1, 3, 2));
}

TEST_CASE("origin rule matches exhaustive enumeration") {
  for (int length = 1; length <= 32; ++length) {
    for (int patch = 1; patch <= std::min(16, length); ++patch) {
      for (int stride = 1; stride <= patch; ++stride) {
        INFO("length=" << length << " patch=" << patch << " stride=" << stride);
        REQUIRE(patch_origins(length, patch, stride) ==
                oracle::enumerate_origins(length, patch, stride));
      }
    }
  }
}

TEST_CASE("extract then assemble reproduces the image for every geometry") {
  for (int channels : {1, 3}) {
    const Image img = testing::random_image(13, 11, channels, 40 + static_cast<unsigned>(channels));
    for (int patch = 1; patch <= 11; ++patch) {
      for (int stride = 1; stride <= patch; ++stride) {
        const auto g = make_geometry(img, patch, stride);
        const Image back = assemble_patches(extract_patches(img, g), g);
        INFO("patch=" << patch << " stride=" << stride << " channels=" << channels);
        REQUIRE(testing::max_abs_diff(back, img) <= 1e-12);
      }
    }
  }
}

TEST_CASE("overlapping patches are averaged") {
  // 2x3 image, 2x2 patches, stride 1: columns 0 and 1 overlap in column 1.
  const PatchGeometry g{2, 1, 2, 3, 1};
  PatchMatrix patches(4, 2);
  patches.col(0).setConstant(0.2);
  patches.col(1).setConstant(0.4);
  const Image img = assemble_patches(patches, g);
  CHECK(img.at(0, 0) == doctest::Approx(0.2));
  CHECK(img.at(1, 1) == doctest::Approx(0.3));
  CHECK(img.at(0, 2) == doctest::Approx(0.4));
}

TEST_CASE("assembly clips out-of-range values") {
  const PatchGeometry g{2, 2, 2, 2, 1};
  PatchMatrix patches(4, 1);
  patches << -0.5, 0.5, 1.5, 1.0;
  const Image img = assemble_patches(patches, g);
  CHECK(img.in_range());
  CHECK(img.at(0, 0) == 0.0);
  CHECK(img.at(1, 0) == 1.0);
}

TEST_CASE("geometry errors") {
  const Image img = testing::random_image(8, 8, 1, 5);
  CHECK_THROWS_AS(make_geometry(img, 9, 4), ParameterError);
  CHECK_THROWS_AS(make_geometry(img, 4, 5), ParameterError);
  CHECK_THROWS_AS(make_geometry(img, 4, 0), ParameterError);
  const PatchGeometry wrong{4, 4, 16, 16, 1};
  CHECK_THROWS_AS(extract_patches(img, wrong), DimensionError);
  const auto g = make_geometry(img, 4, 4);
  CHECK_THROWS_AS(assemble_patches(PatchMatrix::Zero(16, 3), g), DimensionError);
}
