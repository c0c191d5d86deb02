#include "fakepolisher/patches.hpp"

#include <algorithm>
#include <string>

#include "fakepolisher/errors.hpp"

namespace fakepolisher {

void PatchGeometry::validate() const {
  if (channels != 1 && channels != 3) {
    throw ParameterError("patch geometry channels must be 1 or 3");
  }
  if (stride < 1 || stride > patch_size || patch_size > std::min(image_height, image_width)) {
    throw ParameterError("invalid patch geometry: need 1 <= stride (" + std::to_string(stride) +
                         ") <= patch (" + std::to_string(patch_size) + ") <= min side (" +
                         std::to_string(std::min(image_height, image_width)) + ")");
  }
}

std::vector<int> patch_origins(int length, int patch_size, int stride) {
  std::vector<int> origins;
  const int last = length - patch_size;
  for (int pos = 0; pos <= last; pos += stride) origins.push_back(pos);
  if (origins.back() != last) origins.push_back(last);
  return origins;
}

std::vector<int> PatchGeometry::row_origins() const {
  validate();
  return patch_origins(image_height, patch_size, stride);
}

std::vector<int> PatchGeometry::col_origins() const {
  validate();
  return patch_origins(image_width, patch_size, stride);
}

int PatchGeometry::patch_count() const {
  return static_cast<int>(row_origins().size() * col_origins().size());
}

PatchGeometry make_geometry(const Image& image, int patch_size, int stride) {
  PatchGeometry g{patch_size, stride, image.height(), image.width(), image.channels()};
  g.validate();
  return g;
}

namespace {

void check_image(const Image& image, const PatchGeometry& geometry) {
  geometry.validate();
  if (!geometry.matches(image)) {
    throw DimensionError("image " + std::to_string(image.height()) + "x" +
                         std::to_string(image.width()) + "x" + std::to_string(image.channels()) +
                         " does not match patch geometry " +
                         std::to_string(geometry.image_height) + "x" +
                         std::to_string(geometry.image_width) + "x" +
                         std::to_string(geometry.channels));
  }
}

} // namespace

PatchMatrix extract_patches(const Image& image, const PatchGeometry& geometry) {
  check_image(image, geometry);
  const auto rows = geometry.row_origins();
  const auto cols = geometry.col_origins();
  const int p = geometry.patch_size;
  const int c = geometry.channels;
  const auto src = image.values();

  PatchMatrix out(geometry.patch_dim(), static_cast<Eigen::Index>(rows.size() * cols.size()));
  Eigen::Index col = 0;
  for (int r0 : rows) {
    for (int c0 : cols) {
      Eigen::Index k = 0;
      for (int dr = 0; dr < p; ++dr) {
        // One patch row is contiguous in the interleaved image buffer.
        const std::size_t base =
          (static_cast<std::size_t>(r0 + dr) * static_cast<std::size_t>(image.width()) +
           static_cast<std::size_t>(c0)) * static_cast<std::size_t>(c);
        for (int j = 0; j < p * c; ++j) out(k++, col) = src[base + static_cast<std::size_t>(j)];
      }
      ++col;
    }
  }
  return out;
}

namespace {

Image accumulate(const PatchMatrix& patches, const PatchGeometry& geometry,
                 std::span<const int> patch_indices) {
  const auto rows = geometry.row_origins();
  const auto cols = geometry.col_origins();
  const int p = geometry.patch_size;
  const int c = geometry.channels;
  const int total = static_cast<int>(rows.size() * cols.size());

  if (patches.rows() != geometry.patch_dim() ||
      patches.cols() != static_cast<Eigen::Index>(patch_indices.size())) {
    throw DimensionError("patch matrix is " + std::to_string(patches.rows()) + "x" +
                         std::to_string(patches.cols()) + ", expected " +
                         std::to_string(geometry.patch_dim()) + "x" +
                         std::to_string(patch_indices.size()));
  }

  Image sum(geometry.image_height, geometry.image_width, c, 0.0);
  std::vector<int> hits(sum.pixel_count(), 0);
  auto acc = sum.values();
  for (std::size_t col = 0; col < patch_indices.size(); ++col) {
    const int idx = patch_indices[col];
    if (idx < 0 || idx >= total) throw DimensionError("patch index out of range");
    const int r0 = rows[static_cast<std::size_t>(idx) / cols.size()];
    const int c0 = cols[static_cast<std::size_t>(idx) % cols.size()];
    Eigen::Index k = 0;
    for (int dr = 0; dr < p; ++dr) {
      for (int dc = 0; dc < p; ++dc) {
        const std::size_t pix = static_cast<std::size_t>(r0 + dr) *
                                  static_cast<std::size_t>(geometry.image_width) +
                                static_cast<std::size_t>(c0 + dc);
        ++hits[pix];
        for (int ch = 0; ch < c; ++ch) {
          acc[pix * static_cast<std::size_t>(c) + static_cast<std::size_t>(ch)] +=
            patches(k++, static_cast<Eigen::Index>(col));
        }
      }
    }
  }
  for (std::size_t pix = 0; pix < hits.size(); ++pix) {
    if (hits[pix] == 0) continue;
    for (int ch = 0; ch < c; ++ch) {
      acc[pix * static_cast<std::size_t>(c) + static_cast<std::size_t>(ch)] /= hits[pix];
    }
  }
  sum.clip();
  return sum;
}

} // namespace

Image assemble_patches(const PatchMatrix& patches, const PatchGeometry& geometry) {
  geometry.validate();
  std::vector<int> all(static_cast<std::size_t>(geometry.patch_count()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  if (patches.cols() != static_cast<Eigen::Index>(all.size())) {
    throw DimensionError("expected " + std::to_string(all.size()) + " patches, got " +
                         std::to_string(patches.cols()));
  }
  return accumulate(patches, geometry, all);
}

Image assemble_patches(const PatchMatrix& patches, const PatchGeometry& geometry,
                       std::span<const int> patch_indices) {
  geometry.validate();
  return accumulate(patches, geometry, patch_indices);
}

Eigen::VectorXd vectorize(const Image& image) {
  const auto v = image.values();
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Image devectorize(const Eigen::Ref<const Eigen::VectorXd>& values, int height, int width,
                  int channels) {
  std::vector<double> data(values.data(), values.data() + values.size());
  return Image(height, width, channels, std::move(data));
}

} // namespace fakepolisher
