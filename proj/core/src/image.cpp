#include "fakepolisher/image.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fakepolisher/errors.hpp"

namespace fakepolisher {

namespace {

void check_shape(int height, int width, int channels) {
  if (height < 1 || width < 1) {
    throw ParameterError("image dimensions must be positive, got " + std::to_string(height) +
                         "x" + std::to_string(width));
  }
  if (channels != 1 && channels != 3) {
    throw ParameterError("image must have 1 or 3 channels, got " + std::to_string(channels));
  }
}

} // namespace

Image::Image(int height, int width, int channels, double fill)
  : height_{height}, width_{width}, channels_{channels} {
  check_shape(height, width, channels);
  data_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width) *
                 static_cast<std::size_t>(channels),
               fill);
}

Image::Image(int height, int width, int channels, std::vector<double> data)
  : height_{height}, width_{width}, channels_{channels}, data_{std::move(data)} {
  check_shape(height, width, channels);
  const auto expected = static_cast<std::size_t>(height) * static_cast<std::size_t>(width) *
                        static_cast<std::size_t>(channels);
  if (data_.size() != expected) {
    throw DimensionError("image data has " + std::to_string(data_.size()) + " values, expected " +
                         std::to_string(expected));
  }
}

bool Image::in_range() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return v >= 0.0 && v <= 1.0; });
}

void Image::clip() noexcept {
  for (auto& v : data_) v = std::clamp(v, 0.0, 1.0);
}

PixelMask::PixelMask(int height, int width, bool kept) : height_{height}, width_{width} {
  if (height < 0 || width < 0) throw ParameterError("mask dimensions must be nonnegative");
  kept_.assign(static_cast<std::size_t>(height) * static_cast<std::size_t>(width),
               kept ? 1 : 0);
}

std::size_t PixelMask::kept_count() const noexcept {
  return static_cast<std::size_t>(std::count(kept_.begin(), kept_.end(), std::uint8_t{1}));
}

double PixelMask::kept_fraction() const noexcept {
  if (kept_.empty()) return 1.0;
  return static_cast<double>(kept_count()) / static_cast<double>(kept_.size());
}

} // namespace fakepolisher
