#pragma once

#include <vector>

#include "fakepolisher/image.hpp"
#include "fakepolisher/spectrum.hpp"

namespace fakepolisher {

inline constexpr int kToyHistogramBins = 256;

struct ToyExample {
  Image toy;     ///< 8x8 white/orange checkerboard upsampled to 64x64
  Image blurred; ///< toy after a 5x5, sigma 1 Gaussian blur
  std::vector<long> hist_toy;
  std::vector<long> hist_blurred;
  SpectrumReport report_toy;
  SpectrumReport report_blurred;
};

ToyExample build_toy_example();

} // namespace fakepolisher
