#pragma once

#include <vector>

#include "fakepolisher/image.hpp"

namespace fakepolisher {

/// BT.601 luma (0.299 R + 0.587 G + 0.114 B); 1-channel input is returned as is.
Image to_grayscale(const Image& image);

/// Normalized 1-D Gaussian taps of odd length `kernel_size`.
std::vector<double> gaussian_kernel(int kernel_size, double sigma);

/// Separable Gaussian blur per channel with half-sample symmetric reflection
/// at the borders (d c b a | a b c d | d c b a).
Image gaussian_blur(const Image& image, int kernel_size, double sigma);

} // namespace fakepolisher
