#pragma once

#include "fakepolisher/image.hpp"

namespace fakepolisher {

struct Psnr {
  double db = 0.0;
  bool identical = false; ///< MSE == 0; db is +inf
};

struct SimilarityReport {
  double coss = 0.0;
  Psnr psnr;
  double ssim = 0.0;
};

/// Cosine similarity of the vectorized images. Throws ParameterError if either
/// vector is zero, DimensionError on shape mismatch.
double coss(const Image& a, const Image& b);

/// 10 log10(1 / MSE) over all channels, peak 1.0.
Psnr psnr(const Image& a, const Image& b);

/// Mean SSIM over the valid region of an 11x11 Gaussian window (sigma 1.5) on
/// grayscale, C1 = 0.01^2, C2 = 0.03^2. Throws ParameterError if a side is
/// shorter than 11.
double ssim(const Image& a, const Image& b);

SimilarityReport compare(const Image& a, const Image& b);

} // namespace fakepolisher
