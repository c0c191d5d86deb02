#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fakepolisher/image.hpp"

namespace fakepolisher::cli {

/// Image files (.png, .pgm, .ppm, .pnm) directly inside `dir`, sorted by name.
/// A path naming a single file yields just that file.
std::vector<std::filesystem::path> list_images(const std::filesystem::path& path);

struct Corpus {
  std::vector<std::filesystem::path> files;
  std::vector<Image> images;
};

/// Loads every image and throws DimensionError naming the first file whose
/// shape differs from the first one.
Corpus load_corpus(const std::filesystem::path& path);

std::vector<std::string> path_strings(const std::vector<std::filesystem::path>& paths);

} // namespace fakepolisher::cli
