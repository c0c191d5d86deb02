#include "fakepolisher/metrics.hpp"

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <string>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/filters.hpp"
#include "fakepolisher/spectrum.hpp"

namespace fakepolisher {

namespace {

constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;
constexpr double kSsimC1 = 0.01 * 0.01;
constexpr double kSsimC2 = 0.03 * 0.03;

void check_same(const Image& a, const Image& b) {
  if (!a.same_shape(b)) {
    throw DimensionError("image shapes differ: " + std::to_string(a.height()) + "x" +
                         std::to_string(a.width()) + "x" + std::to_string(a.channels()) +
                         " vs " + std::to_string(b.height()) + "x" + std::to_string(b.width()) +
                         "x" + std::to_string(b.channels()));
  }
}

// Valid-region separable filtering with a normalized Gaussian window.
Eigen::MatrixXd filter_valid(const Eigen::MatrixXd& x, const std::vector<double>& taps) {
  const auto k = static_cast<Eigen::Index>(taps.size());
  const Eigen::Index h = x.rows() - k + 1;
  const Eigen::Index w = x.cols() - k + 1;
  Eigen::MatrixXd rows_done = Eigen::MatrixXd::Zero(x.rows(), w);
  for (Eigen::Index t = 0; t < k; ++t) {
    rows_done += taps[static_cast<std::size_t>(t)] * x.middleCols(t, w);
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(h, w);
  for (Eigen::Index t = 0; t < k; ++t) {
    out += taps[static_cast<std::size_t>(t)] * rows_done.middleRows(t, h);
  }
  return out;
}

} // namespace

double coss(const Image& a, const Image& b) {
  check_same(a, b);
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    dot += va[i] * vb[i];
    na += va[i] * va[i];
    nb += vb[i] * vb[i];
  }
  if (na == 0.0 || nb == 0.0) throw ParameterError("cosine similarity undefined for a zero image");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

Psnr psnr(const Image& a, const Image& b) {
  check_same(a, b);
  double sum = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    const double e = va[i] - vb[i];
    sum += e * e;
  }
  if (sum == 0.0) return {std::numeric_limits<double>::infinity(), true};
  const double mse = sum / static_cast<double>(va.size());
  return {10.0 * std::log10(1.0 / mse), false};
}

double ssim(const Image& a, const Image& b) {
  check_same(a, b);
  if (std::min(a.height(), a.width()) < kSsimWindow) {
    throw ParameterError("SSIM needs images of at least " + std::to_string(kSsimWindow) +
                         " pixels per side");
  }
  const Eigen::MatrixXd x = gray_plane(a);
  const Eigen::MatrixXd y = gray_plane(b);
  const auto taps = gaussian_kernel(kSsimWindow, kSsimSigma);

  const Eigen::MatrixXd mx = filter_valid(x, taps);
  const Eigen::MatrixXd my = filter_valid(y, taps);
  const Eigen::MatrixXd sxx = filter_valid(x.cwiseProduct(x), taps) - mx.cwiseProduct(mx);
  const Eigen::MatrixXd syy = filter_valid(y.cwiseProduct(y), taps) - my.cwiseProduct(my);
  const Eigen::MatrixXd sxy = filter_valid(x.cwiseProduct(y), taps) - mx.cwiseProduct(my);

  const Eigen::ArrayXXd num = (2.0 * mx.cwiseProduct(my).array() + kSsimC1) *
                              (2.0 * sxy.array() + kSsimC2);
  const Eigen::ArrayXXd den = (mx.array().square() + my.array().square() + kSsimC1) *
                              (sxx.array() + syy.array() + kSsimC2);
  return (num / den).mean();
}

SimilarityReport compare(const Image& a, const Image& b) {
  return {coss(a, b), psnr(a, b), ssim(a, b)};
}

} // namespace fakepolisher
