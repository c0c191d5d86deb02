#include "fakepolisher/toy.hpp"

#include "fakepolisher/filters.hpp"
#include "fakepolisher/synth.hpp"

namespace fakepolisher {

namespace {

constexpr Rgb kWhite = {1.0, 1.0, 1.0};
constexpr Rgb kOrange = {1.0, 0.647, 0.0};

} // namespace

ToyExample build_toy_example() {
  ToyExample toy;
  // Nearest-neighbour upsampling keeps both tones pure, as in a 2x-per-stage
  // unpooling decoder.
  toy.toy = resize_nearest(make_checkerboard(8, kWhite, kOrange), 64, 64);
  toy.blurred = gaussian_blur(toy.toy, 5, 1.0);
  toy.hist_toy = histogram(toy.toy, kToyHistogramBins);
  toy.hist_blurred = histogram(toy.blurred, kToyHistogramBins);
  toy.report_toy = spectrum(toy.toy);
  toy.report_blurred = spectrum(toy.blurred);
  return toy;
}

} // namespace fakepolisher
