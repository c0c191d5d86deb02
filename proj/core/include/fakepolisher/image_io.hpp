#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "fakepolisher/image.hpp"

namespace fakepolisher {

/// Reads 8-bit PNG, binary PGM (P5) or binary PPM (P6); v = byte / 255.
/// Gray+alpha and RGBA PNGs lose their alpha channel.
Image read_image(const std::filesystem::path& path);

/// Writes PNG or PGM/PPM depending on the extension (.png, .pgm, .ppm, .pnm);
/// bytes are round(clamp(v) * 255). The file is replaced atomically.
void write_image(const std::filesystem::path& path, const Image& image);

std::vector<std::uint8_t> encode_png(const Image& image);
Image decode_png(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_pnm(const Image& image);
Image decode_pnm(const std::vector<std::uint8_t>& bytes);

/// Nonzero-intensity pixels of a (grayscale-converted) image become kept.
PixelMask mask_from_image(const Image& image);

} // namespace fakepolisher
