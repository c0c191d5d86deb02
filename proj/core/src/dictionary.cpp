#include "fakepolisher/dictionary.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "fakepolisher/errors.hpp"

namespace fakepolisher {

const char* to_string(DictionaryKind kind) noexcept {
  return kind == DictionaryKind::Pca ? "pca" : "ksvd";
}

DictionaryGeometry DictionaryGeometry::global(int height, int width, int channels) {
  if (height < 0 || width < 0 || channels < 0 ||
      height > static_cast<int>(std::numeric_limits<std::uint32_t>::max() >> 1) ||
      width > static_cast<int>(std::numeric_limits<std::uint32_t>::max() >> 1) ||
      channels > 255) {
    throw ParameterError("global geometry out of range");
  }
  return {0, 0, static_cast<std::uint32_t>(height), static_cast<std::uint32_t>(width),
          static_cast<std::uint8_t>(channels)};
}

DictionaryGeometry DictionaryGeometry::patches(int patch_size, int stride, int channels) {
  if (patch_size < 1 || patch_size > 65535 || stride < 1 || stride > patch_size ||
      (channels != 1 && channels != 3)) {
    throw ParameterError("invalid patch dictionary geometry");
  }
  return {static_cast<std::uint16_t>(patch_size), static_cast<std::uint16_t>(stride), 0, 0,
          static_cast<std::uint8_t>(channels)};
}

PatchGeometry DictionaryGeometry::tiling(int image_height, int image_width) const {
  if (is_global()) throw ParameterError("global dictionary has no patch tiling");
  PatchGeometry g{patch_size, stride, image_height, image_width, channels};
  g.validate();
  return g;
}

Dictionary::Dictionary(DictionaryKind kind, Eigen::MatrixXd atoms, Eigen::VectorXd mean,
                       DictionaryGeometry geometry, TrainMeta meta)
  : kind_{kind}, atoms_{std::move(atoms)}, mean_{std::move(mean)}, geometry_{geometry},
    meta_{meta} {
  if (atoms_.rows() < 1 || atoms_.cols() < 1) throw ParameterError("dictionary has no atoms");
  if (mean_.size() != atoms_.rows()) {
    throw DimensionError("mean has length " + std::to_string(mean_.size()) +
                         ", atoms have dimension " + std::to_string(atoms_.rows()));
  }
  if (kind_ == DictionaryKind::Pca && atoms_.cols() > atoms_.rows()) {
    throw ParameterError("a PCA dictionary cannot have more atoms than dimensions");
  }
  if (!atoms_.allFinite() || !mean_.allFinite()) {
    throw ParameterError("dictionary contains non-finite values");
  }
  for (Eigen::Index j = 0; j < atoms_.cols(); ++j) {
    if (std::abs(atoms_.col(j).norm() - 1.0) > 1e-6) {
      throw ParameterError("atom " + std::to_string(j) + " is not unit-norm");
    }
  }
  if (!geometry_.is_global()) {
    const int expected = geometry_.patch_size * geometry_.patch_size * geometry_.channels;
    if (expected != atoms_.rows()) {
      throw DimensionError("patch geometry implies dimension " + std::to_string(expected) +
                           ", atoms have " + std::to_string(atoms_.rows()));
    }
  } else if (geometry_.height != 0) {
    const auto expected = static_cast<Eigen::Index>(geometry_.height) * geometry_.width *
                          geometry_.channels;
    if (expected != atoms_.rows()) {
      throw DimensionError("global geometry implies dimension " + std::to_string(expected) +
                           ", atoms have " + std::to_string(atoms_.rows()));
    }
  }
}

bool operator==(const Dictionary& a, const Dictionary& b) {
  if (a.kind_ != b.kind_ || !(a.geometry_ == b.geometry_) || !(a.meta_ == b.meta_) ||
      a.atoms_.rows() != b.atoms_.rows() || a.atoms_.cols() != b.atoms_.cols() ||
      a.mean_.size() != b.mean_.size()) {
    return false;
  }
  const auto bytes = [](const auto& m) { return static_cast<std::size_t>(m.size()) * sizeof(double); };
  return std::memcmp(a.atoms_.data(), b.atoms_.data(), bytes(a.atoms_)) == 0 &&
         std::memcmp(a.mean_.data(), b.mean_.data(), bytes(a.mean_)) == 0;
}

} // namespace fakepolisher
