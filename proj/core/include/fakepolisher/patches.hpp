#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "fakepolisher/image.hpp"

namespace fakepolisher {

/// d x n matrix, one vectorized patch (or image) per column.
using PatchMatrix = Eigen::MatrixXd;

/// Square patch tiling of an image.
///
/// Along each axis patch origins are 0, stride, 2*stride, ... while the patch
/// fits, plus one final origin clamped so the last patch ends on the image edge.
struct PatchGeometry {
  int patch_size = 0;
  int stride = 0;
  int image_height = 0;
  int image_width = 0;
  int channels = 1;

  /// Throws ParameterError unless 1 <= stride <= patch_size <= min(H, W).
  void validate() const;

  std::vector<int> row_origins() const;
  std::vector<int> col_origins() const;
  int patch_count() const;
  /// Length of a vectorized patch: patch_size^2 * channels.
  int patch_dim() const noexcept { return patch_size * patch_size * channels; }

  bool matches(const Image& image) const noexcept {
    return image.height() == image_height && image.width() == image_width &&
           image.channels() == channels;
  }

  friend bool operator==(const PatchGeometry&, const PatchGeometry&) = default;
};

PatchGeometry make_geometry(const Image& image, int patch_size, int stride);

/// Origins along one axis of length `length`.
std::vector<int> patch_origins(int length, int patch_size, int stride);

/// Columns are patches in raster order of their origins; within a column the
/// layout is row-major over the patch with channels interleaved.
PatchMatrix extract_patches(const Image& image, const PatchGeometry& geometry);

/// Inverse of extract_patches: every pixel is the mean of all patch values
/// covering it, clipped to [0,1].
Image assemble_patches(const PatchMatrix& patches, const PatchGeometry& geometry);

/// Partial assembly from the patches listed in `patch_indices` (raster indices,
/// one column of `patches` each). Pixels no listed patch covers are zero.
Image assemble_patches(const PatchMatrix& patches, const PatchGeometry& geometry,
                       std::span<const int> patch_indices);

/// Whole-image vector (data order) and back.
Eigen::VectorXd vectorize(const Image& image);
Image devectorize(const Eigen::Ref<const Eigen::VectorXd>& values, int height, int width,
                  int channels);

} // namespace fakepolisher
