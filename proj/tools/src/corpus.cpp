#include "corpus.hpp"

#include <algorithm>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/image_io.hpp"

namespace fakepolisher::cli {

namespace {

bool is_image(const std::filesystem::path& p) {
  const auto ext = p.extension().string();
  return ext == ".png" || ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

std::string shape(const Image& img) {
  return std::to_string(img.height()) + "x" + std::to_string(img.width()) + "x" +
         std::to_string(img.channels());
}

} // namespace

std::vector<std::filesystem::path> list_images(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw IoError(path.string() + " does not exist");
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && is_image(entry.path())) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw IoError("no images in " + path.string());
  return files;
}

Corpus load_corpus(const std::filesystem::path& path) {
  Corpus corpus;
  corpus.files = list_images(path);
  for (const auto& f : corpus.files) {
    corpus.images.push_back(read_image(f));
    if (!corpus.images.back().same_shape(corpus.images.front())) {
      throw DimensionError(f.string() + " is " + shape(corpus.images.back()) + ", expected " +
                           shape(corpus.images.front()) + " like " + corpus.files.front().string());
    }
  }
  return corpus;
}

std::vector<std::string> path_strings(const std::vector<std::filesystem::path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.string());
  return out;
}

} // namespace fakepolisher::cli
