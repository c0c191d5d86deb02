#include "fakepolisher/filters.hpp"

#include <cmath>
#include <string>

#include "fakepolisher/errors.hpp"

namespace fakepolisher {

Image to_grayscale(const Image& image) {
  if (image.channels() == 1) return image;
  Image out(image.height(), image.width(), 1);
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      out.at(r, c) = 0.299 * image.at(r, c, 0) + 0.587 * image.at(r, c, 1) +
                     0.114 * image.at(r, c, 2);
    }
  }
  out.clip();
  return out;
}

std::vector<double> gaussian_kernel(int kernel_size, double sigma) {
  if (kernel_size < 1 || kernel_size % 2 == 0) {
    throw ParameterError("gaussian kernel size must be odd and >= 1, got " +
                         std::to_string(kernel_size));
  }
  if (!(sigma > 0.0)) throw ParameterError("gaussian sigma must be positive");
  const int radius = kernel_size / 2;
  std::vector<double> taps(static_cast<std::size_t>(kernel_size));
  double total = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-0.5 * (i * i) / (sigma * sigma));
    taps[static_cast<std::size_t>(i + radius)] = w;
    total += w;
  }
  for (auto& w : taps) w /= total;
  return taps;
}

namespace {

// Half-sample symmetric reflection into [0, n).
int reflect(int i, int n) {
  const int period = 2 * n;
  i %= period;
  if (i < 0) i += period;
  return i < n ? i : period - 1 - i;
}

} // namespace

Image gaussian_blur(const Image& image, int kernel_size, double sigma) {
  const auto taps = gaussian_kernel(kernel_size, sigma);
  if (kernel_size == 1) return image;
  const int radius = kernel_size / 2;
  const int h = image.height();
  const int w = image.width();
  const int nc = image.channels();

  Image tmp(h, w, nc);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      for (int ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += taps[static_cast<std::size_t>(k + radius)] * image.at(r, reflect(c + k, w), ch);
        }
        tmp.at(r, c, ch) = acc;
      }
    }
  }
  Image out(h, w, nc);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      for (int ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          acc += taps[static_cast<std::size_t>(k + radius)] * tmp.at(reflect(r + k, h), c, ch);
        }
        out.at(r, c, ch) = acc;
      }
    }
  }
  out.clip();
  return out;
}

} // namespace fakepolisher
