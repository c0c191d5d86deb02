#pragma once

#include <cstdint>
#include <optional>

#include "fakepolisher/dictionary.hpp"
#include "fakepolisher/image.hpp"

namespace fakepolisher {

enum class PolishMethod { Pca, Ksvd };

struct PolishConfig {
  PolishMethod method = PolishMethod::Ksvd;
  int sparsity = 20;          ///< tau, K-SVD reconstruction sparsity
  double dropout_rate = 0.10; ///< K-SVD only
  std::uint64_t seed = 0;
  std::optional<PixelMask> region; ///< pixels to polish; absent = whole image

  static PolishConfig pca() { return {PolishMethod::Pca, 20, 0.0, 0, std::nullopt}; }
  static PolishConfig ksvd() { return {}; }

  /// Throws ParameterError unless sparsity >= 1 and 0 <= dropout_rate < 1.
  void validate() const;
};

struct PolishStats {
  int patches_coded = 0;
  /// Patches whose rows were all dropped and were coded unmasked.
  int fully_dropped_patches = 0;
  bool empty_region = false;
};

/// Projects the whole image onto a global PCA dictionary and reconstructs it.
/// Throws DimensionError when the image shape differs from the training shape.
Image polish_pca(const Image& image, const Dictionary& dict, const PolishConfig& config);

/// Pixel dropout, masked OMP per patch, full-patch reconstruction and overlap
/// averaging.
Image polish_ksvd(const Image& image, const Dictionary& dict, const PolishConfig& config,
                  PolishStats* stats = nullptr);

/// Polishes config.region only; every other pixel is copied from the input.
Image polish_partial(const Image& image, const Dictionary& dict, const PolishConfig& config,
                     PolishStats* stats = nullptr);

/// Dispatches on config.method and config.region.
Image polish(const Image& image, const Dictionary& dict, const PolishConfig& config,
             PolishStats* stats = nullptr);

} // namespace fakepolisher
