#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "fakepolisher/image.hpp"

namespace fakepolisher {

enum class ArtifactType { Checkerboard, UnpoolingZeroFill, InterpolationPeriodicity };

const char* to_string(ArtifactType type) noexcept;
/// Accepts "checkerboard", "unpooling", "interpolation" and the long names.
ArtifactType parse_artifact_type(std::string_view name);

struct ArtifactKind {
  ArtifactType type = ArtifactType::Checkerboard;
  double strength = 0.3; ///< (0, 1]; 0 is accepted as the identity
  int period = 4;        ///< 2, 4 or 8
};

using Rgb = std::array<double, 3>;

/// Smooth images: 4-8 seeded cosines with integer frequencies of radius <= 4
/// cycles per side plus a radial ramp, min-max normalized to [0,1]. Image i
/// depends only on (seed, first_index + i), so corpora are prefix-consistent.
std::vector<Image> generate_clean_corpus(int n, int size, int channels, std::uint64_t seed,
                                         int first_index = 0);

/// Single corpus member; generate_clean_corpus(...)[i] == clean_image(first_index + i, ...).
Image clean_image(int index, int size, int channels, std::uint64_t seed);

/// Adds an upsampling footprint. The seed is recorded for provenance; all
/// three kinds are deterministic functions of the image.
Image inject_artifact(const Image& image, const ArtifactKind& artifact, std::uint64_t seed);

Image make_checkerboard(int cells, const Rgb& color_a, const Rgb& color_b);

/// Half-pixel-center bilinear resampling with edge clamping.
Image resize_bilinear(const Image& image, int new_height, int new_width);
Image resize_nearest(const Image& image, int new_height, int new_width);

} // namespace fakepolisher
