#pragma once

#include <cstdint>

#include "fakepolisher/image.hpp"

namespace fakepolisher {

struct DropoutResult {
  Image image;
  PixelMask mask;
};

/// Marks floor(rate * H * W) distinct pixel sites as dropped, chosen uniformly
/// without replacement from a generator seeded with `seed`. The image comes
/// back untouched; consumers skip dropped pixels through the mask.
DropoutResult apply_pixel_dropout(const Image& image, double rate, std::uint64_t seed);

} // namespace fakepolisher
