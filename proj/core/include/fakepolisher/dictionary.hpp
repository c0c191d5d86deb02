#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>

#include "fakepolisher/patches.hpp"

namespace fakepolisher {

enum class DictionaryKind : std::uint8_t { Pca = 0, Ksvd = 1 };

const char* to_string(DictionaryKind kind) noexcept;

/// Where a dictionary's vectors come from. A zero patch size marks a global
/// (whole-image) dictionary; height/width/channels then record the image shape
/// it was trained on, or stay zero when unknown.
struct DictionaryGeometry {
  std::uint16_t patch_size = 0;
  std::uint16_t stride = 0;
  std::uint32_t height = 0;
  std::uint32_t width = 0;
  std::uint8_t channels = 0;

  static DictionaryGeometry global(int height, int width, int channels);
  static DictionaryGeometry patches(int patch_size, int stride, int channels);

  bool is_global() const noexcept { return patch_size == 0; }
  /// Patch tiling of an image of the given size; only for patch dictionaries.
  PatchGeometry tiling(int image_height, int image_width) const;

  friend bool operator==(const DictionaryGeometry&, const DictionaryGeometry&) = default;
};

struct TrainMeta {
  std::uint64_t n_train = 0;
  std::uint16_t sparsity_k = 0; ///< 0: not applicable (PCA)
  std::uint16_t iterations = 0; ///< 0: not applicable (PCA)
  std::uint64_t seed = 0;

  friend bool operator==(const TrainMeta&, const TrainMeta&) = default;
};

/// d x m atom matrix (one unit-norm atom per column) plus the mean added back
/// on reconstruction. Immutable once built.
class Dictionary {
public:
  /// Throws DimensionError if `mean` is not length d, ParameterError if an
  /// atom is not unit-norm within 1e-6, or if a PCA dictionary has m > d.
  Dictionary(DictionaryKind kind, Eigen::MatrixXd atoms, Eigen::VectorXd mean,
             DictionaryGeometry geometry, TrainMeta meta);

  DictionaryKind kind() const noexcept { return kind_; }
  const Eigen::MatrixXd& atoms() const noexcept { return atoms_; }
  const Eigen::VectorXd& mean() const noexcept { return mean_; }
  const DictionaryGeometry& geometry() const noexcept { return geometry_; }
  const TrainMeta& meta() const noexcept { return meta_; }

  int dim() const noexcept { return static_cast<int>(atoms_.rows()); }
  int size() const noexcept { return static_cast<int>(atoms_.cols()); }

  /// Bitwise equality of every field.
  friend bool operator==(const Dictionary& a, const Dictionary& b);

private:
  DictionaryKind kind_;
  Eigen::MatrixXd atoms_;
  Eigen::VectorXd mean_;
  DictionaryGeometry geometry_;
  TrainMeta meta_;
};

} // namespace fakepolisher
