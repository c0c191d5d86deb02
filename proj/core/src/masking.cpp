#include "fakepolisher/masking.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/random.hpp"

namespace fakepolisher {

DropoutResult apply_pixel_dropout(const Image& image, double rate, std::uint64_t seed) {
  if (!(rate >= 0.0 && rate < 1.0)) {
    throw ParameterError("dropout rate must lie in [0, 1)");
  }
  const std::size_t sites = image.pixel_count();
  const auto drop = static_cast<std::size_t>(std::floor(rate * static_cast<double>(sites)));

  PixelMask mask = PixelMask::all_kept(image.height(), image.width());
  // Partial Fisher-Yates: the first `drop` slots become a uniform sample.
  std::vector<std::size_t> order(sites);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < drop; ++i) {
    const std::size_t j = i + rng.uniform_index(sites - i);
    std::swap(order[i], order[j]);
    const auto pix = order[i];
    mask.set(static_cast<int>(pix / static_cast<std::size_t>(image.width())),
             static_cast<int>(pix % static_cast<std::size_t>(image.width())), false);
  }
  return {image, std::move(mask)};
}

} // namespace fakepolisher
