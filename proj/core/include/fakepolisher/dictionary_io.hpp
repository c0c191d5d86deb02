#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fakepolisher/dictionary.hpp"

namespace fakepolisher {

/// Little-endian "FPDICT01" layout:
///   magic[8] kind:u8 d:u32 m:u32
///   patch_size:u16 stride:u16 height:u32 width:u32 channels:u8
///   n_train:u64 sparsity_k:u16 iterations:u16 seed:u64
///   mean:f64[d] atoms:f64[d*m] (column-major) crc32:u32 (over all prior bytes)
std::vector<std::uint8_t> serialize_dictionary(const Dictionary& dict);

/// Throws FormatError on bad magic, truncation, trailing bytes, checksum
/// mismatch or inconsistent content.
Dictionary deserialize_dictionary(std::span<const std::uint8_t> bytes);

void save_dictionary(const Dictionary& dict, const std::filesystem::path& path);
Dictionary load_dictionary(const std::filesystem::path& path);

} // namespace fakepolisher
