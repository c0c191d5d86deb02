#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fakepolisher {

/// Row-major H x W x C intensity grid. Channels are interleaved per pixel,
/// so the value of (row, col, ch) lives at ((row * W) + col) * C + ch.
///
/// Construction does not clip; `in_range()` reports whether every value lies
/// in [0,1], and pipeline outputs are clipped before they are returned.
class Image {
public:
  Image() = default;
  Image(int height, int width, int channels, double fill = 0.0);
  Image(int height, int width, int channels, std::vector<double> data);

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }
  int channels() const noexcept { return channels_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_);
  }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double& at(int row, int col, int ch = 0) noexcept { return data_[index(row, col, ch)]; }
  double at(int row, int col, int ch = 0) const noexcept { return data_[index(row, col, ch)]; }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }

  bool same_shape(const Image& other) const noexcept {
    return height_ == other.height_ && width_ == other.width_ && channels_ == other.channels_;
  }
  bool in_range() const noexcept;
  void clip() noexcept;

  friend bool operator==(const Image&, const Image&) = default;

private:
  std::size_t index(int row, int col, int ch) const noexcept {
    return (static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
            static_cast<std::size_t>(col)) * static_cast<std::size_t>(channels_) +
           static_cast<std::size_t>(ch);
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 1;
  std::vector<double> data_;
};

/// Per-pixel keep/drop flags; applies to every channel of a pixel.
class PixelMask {
public:
  PixelMask() = default;
  PixelMask(int height, int width, bool kept);

  static PixelMask all_kept(int height, int width) { return {height, width, true}; }
  static PixelMask none_kept(int height, int width) { return {height, width, false}; }

  int height() const noexcept { return height_; }
  int width() const noexcept { return width_; }

  bool kept(int row, int col) const noexcept { return kept_[index(row, col)] != 0; }
  void set(int row, int col, bool kept) noexcept { kept_[index(row, col)] = kept ? 1 : 0; }

  std::size_t kept_count() const noexcept;
  std::size_t dropped_count() const noexcept { return kept_.size() - kept_count(); }
  /// Fraction of kept pixels in [0,1]; 1 for an empty mask.
  double kept_fraction() const noexcept;
  bool matches(const Image& image) const noexcept {
    return height_ == image.height() && width_ == image.width();
  }

  std::span<const std::uint8_t> flags() const noexcept { return kept_; }

  friend bool operator==(const PixelMask&, const PixelMask&) = default;

private:
  std::size_t index(int row, int col) const noexcept {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }

  int height_ = 0;
  int width_ = 0;
  std::vector<std::uint8_t> kept_;
};

} // namespace fakepolisher
