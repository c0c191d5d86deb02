#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/filters.hpp"
#include "fakepolisher/metrics.hpp"
#include "fakepolisher/spectrum.hpp"
#include "fakepolisher/toy.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace fakepolisher;

namespace {

Image quarter_cosine(int n) {
  Image img(n, n, 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      img.at(r, c) = 0.5 + 0.4 * std::cos(2 * std::numbers::pi * r / 4) * std::cos(2 * std::numbers::pi * c / 4);
    }
  }
  return img;
}

Image add_noise(const Image& img, double amplitude, std::uint64_t seed) {
  Rng rng(seed);
  Image out = img;
  for (auto& v : out.values()) v += amplitude * rng.normal();
  return out;
}

} // namespace

TEST_CASE("dft2 matches the naive transform and Parseval") {
  Rng rng(1);
  const Eigen::MatrixXd x = oracle::random_matrix(6, 10, rng);
  const Eigen::MatrixXcd f = dft2(x);
  CHECK((f - oracle::naive_dft2(x)).cwiseAbs().maxCoeff() <= 1e-9);
  const double spatial = x.squaredNorm();
  const double spectral = f.cwiseAbs2().sum();
  CHECK(std::abs(spectral - 60 * spatial) <= 1e-6 * spectral);
}

TEST_CASE("blob ratio on constants and quarter-frequency cosines") {
  CHECK(spectrum(Image(32, 32, 3, 0.4)).blob_energy_ratio <= 1e-12);
  const SpectrumReport rep = spectrum(quarter_cosine(32));
  CHECK(rep.blob_energy_ratio >= 0.9);
  CHECK(rep.blob_energy_ratio <= 1.0);
  CHECK(rep.blob_sites.size() == 4);
  CHECK(rep.log_magnitude.rows() == 32);
  CHECK(rep.log_magnitude.allFinite());
  // DC sits at the centre after the shift
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  rep.log_magnitude.maxCoeff(&r, &c);
  CHECK(r == 16);
  CHECK(c == 16);
}

TEST_CASE("blob ratio ignores a constant offset") {
  const Image img = testing::random_image(24, 20, 1, 4);
  Image shifted = img;
  for (auto& v : shifted.values()) v += 0.3;
  CHECK(std::abs(spectrum(img).blob_energy_ratio - spectrum(shifted).blob_energy_ratio) <= 1e-8);
}

TEST_CASE("blob ratio stays in range on random images") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const double v = spectrum(testing::random_image(17, 23, 3, s)).blob_energy_ratio;
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("spectrum image is normalized") {
  const Image img = spectrum_image(spectrum(quarter_cosine(16)));
  CHECK(img.channels() == 1);
  CHECK(img.in_range());
  const auto [lo, hi] = std::minmax_element(img.values().begin(), img.values().end());
  CHECK(*lo == 0.0);
  CHECK(*hi == 1.0);
}

TEST_CASE("histogram") {
  const auto flat = histogram(Image(10, 10, 1, 0.5), 256);
  CHECK(flat[128] == 100);
  CHECK(std::accumulate(flat.begin(), flat.end(), 0L) == 100);
  CHECK(histogram(Image(2, 2, 1, 1.0), 4)[3] == 4);
  CHECK(histogram(Image(2, 2, 1, 0.0), 4)[0] == 4);
  const auto h = histogram(testing::random_image(13, 7, 3, 2), 10);
  CHECK(std::accumulate(h.begin(), h.end(), 0L) == 91);
  CHECK_THROWS_AS(histogram(Image(2, 2, 1), 1), ParameterError);
}

TEST_CASE("histogram peaks") {
  CHECK(histogram_peaks({0, 3, 1, 0, 5, 5, 2}) == std::vector<int>{1, 4});
  CHECK(histogram_peaks({4, 0, 0, 4}) == std::vector<int>{0, 3});
  CHECK(histogram_peaks({0, 0, 0}).empty());
}

TEST_CASE("coss") {
  const Image a = testing::random_image(5, 5, 3, 1);
  CHECK(coss(a, a) == doctest::Approx(1.0));
  CHECK(coss(Image(3, 3, 1, 0.2), Image(3, 3, 1, 0.9)) == doctest::Approx(1.0));
  CHECK(coss(Image(1, 2, 1, std::vector<double>{1, 0}), Image(1, 2, 1, std::vector<double>{1, 1})) ==
        doctest::Approx(1 / std::sqrt(2.0)));
  const Image b = testing::random_image(5, 5, 3, 2);
  CHECK(std::abs(coss(a, b) - coss(b, a)) <= 1e-12);
  CHECK_THROWS_AS(coss(a, Image(5, 5, 3)), ParameterError);
  CHECK_THROWS_AS(coss(a, Image(5, 4, 3, 0.5)), DimensionError);
}

TEST_CASE("psnr") {
  CHECK(psnr(Image(1, 1, 1, 0.0), Image(1, 1, 1, 0.5)).db == doctest::Approx(6.0206).epsilon(1e-5));
  const Image a = testing::random_image(8, 8, 3, 3);
  const Psnr same = psnr(a, a);
  CHECK(same.identical);
  CHECK(std::isinf(same.db));
  double previous = std::numeric_limits<double>::infinity();
  for (double amp : {0.01, 0.05, 0.2}) {
    const double db = psnr(a, add_noise(a, amp, 9)).db;
    CHECK(db < previous);
    previous = db;
  }
}

TEST_CASE("ssim against a reference implementation") {
  const Eigen::MatrixXd a = oracle::reference_texture();
  const Image img = testing::from_matrix(a);
  CHECK(ssim(img, img) == doctest::Approx(1.0).epsilon(1e-12));
  const Eigen::MatrixXd inv = (1.0 - a.array()).matrix();
  const double inverted = ssim(img, testing::from_matrix(inv));
  CHECK(inverted < 0.5);
  CHECK(inverted == doctest::Approx(-0.8924001214601553).epsilon(1e-9));
  CHECK(ssim(img, testing::from_matrix((0.6 * a.array() + 0.2).matrix())) ==
        doctest::Approx(0.8803346443208947).epsilon(1e-9));
  Eigen::MatrixXd wavy = a;
  for (int r = 0; r < 32; ++r) {
    for (int c = 0; c < 32; ++c) {
      wavy(r, c) = std::clamp(a(r, c) + 0.1 * std::sin(3.1 * r) * std::cos(2.3 * c), 0.0, 1.0);
    }
  }
  CHECK(ssim(img, testing::from_matrix(wavy)) == doctest::Approx(0.9795626916475225).epsilon(1e-9));
}

TEST_CASE("ssim symmetry and size checks") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    const Image a = testing::random_image(16, 19, 3, s);
    const Image b = testing::random_image(16, 19, 3, s + 10);
    CHECK(std::abs(ssim(a, b) - ssim(b, a)) <= 1e-12);
  }
  CHECK_THROWS_AS(ssim(Image(10, 20, 1), Image(10, 20, 1)), ParameterError);
  const SimilarityReport rep = compare(testing::random_image(12, 12, 1, 1), testing::random_image(12, 12, 1, 1));
  CHECK(rep.psnr.identical);
  CHECK(rep.ssim == doctest::Approx(1.0));
}

TEST_CASE("toy checkerboard example") {
  const ToyExample toy = build_toy_example();
  CHECK(toy.toy.height() == 64);
  CHECK(toy.toy.width() == 64);
  std::vector<int> nonzero;
  for (int b = 0; b < kToyHistogramBins; ++b) {
    if (toy.hist_toy[static_cast<std::size_t>(b)] > 0) nonzero.push_back(b);
  }
  // grayscale orange is 0.299 + 0.587 * 0.647 = 0.6788 -> bin 173
  REQUIRE(nonzero == std::vector<int>{173, 255});
  CHECK(toy.hist_toy[173] == toy.hist_toy[255]);

  const auto peaks = histogram_peaks(toy.hist_blurred);
  CHECK(peaks.size() >= 2);
  CHECK(peaks.front() + peaks.back() == 173 + 255);
  CHECK(toy.report_blurred.blob_energy_ratio >= 0.3 * toy.report_toy.blob_energy_ratio);

  const Image reblur = gaussian_blur(toy.toy, 5, 1.0);
  CHECK(reblur == toy.blurred);
}
