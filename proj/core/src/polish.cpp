#include "fakepolisher/polish.hpp"

#include <atomic>
#include <string>
#include <vector>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/masking.hpp"
#include "fakepolisher/parallel.hpp"
#include "fakepolisher/patches.hpp"
#include "fakepolisher/sparse_coding.hpp"

namespace fakepolisher {

void PolishConfig::validate() const {
  if (sparsity < 1) throw ParameterError("reconstruction sparsity must be >= 1");
  if (!(dropout_rate >= 0.0 && dropout_rate < 1.0)) {
    throw ParameterError("dropout rate must lie in [0, 1)");
  }
}

namespace {

std::string shape(const Image& image) {
  return std::to_string(image.height()) + "x" + std::to_string(image.width()) + "x" +
         std::to_string(image.channels());
}

void check_pca(const Image& image, const Dictionary& dict) {
  if (dict.kind() != DictionaryKind::Pca || !dict.geometry().is_global()) {
    throw ParameterError("PCA polishing needs a global PCA dictionary");
  }
  const auto& g = dict.geometry();
  const bool known = g.height != 0;
  if (static_cast<Eigen::Index>(image.size()) != dict.dim() ||
      (known && (g.height != static_cast<std::uint32_t>(image.height()) ||
                 g.width != static_cast<std::uint32_t>(image.width()) ||
                 g.channels != static_cast<std::uint8_t>(image.channels())))) {
    throw DimensionError("image " + shape(image) + " does not match the PCA dictionary (" +
                         (known ? std::to_string(g.height) + "x" + std::to_string(g.width) + "x" +
                                    std::to_string(g.channels)
                                : "dimension " + std::to_string(dict.dim())) +
                         ")");
  }
}

PatchGeometry check_ksvd(const Image& image, const Dictionary& dict) {
  if (dict.geometry().is_global()) {
    throw ParameterError("patch polishing needs a dictionary with patch geometry");
  }
  if (dict.geometry().channels != image.channels()) {
    throw DimensionError("image " + shape(image) + " has " + std::to_string(image.channels()) +
                         " channels, dictionary patches have " +
                         std::to_string(dict.geometry().channels));
  }
  if (std::min(image.height(), image.width()) < dict.geometry().patch_size) {
    throw DimensionError("image " + shape(image) + " is smaller than the dictionary patch size " +
                         std::to_string(dict.geometry().patch_size));
  }
  return dict.geometry().tiling(image.height(), image.width());
}

// Codes the listed patches under the dropout mask and reassembles them.
Image code_patches(const Image& image, const Dictionary& dict, const PolishConfig& config,
                   const PatchGeometry& geometry, std::span<const int> indices,
                   PolishStats* stats) {
  const PixelMask mask = apply_pixel_dropout(image, config.dropout_rate, config.seed).mask;
  const PatchMatrix patches = extract_patches(image, geometry);
  const auto rows = geometry.row_origins();
  const auto cols = geometry.col_origins();
  const int p = geometry.patch_size;
  const int nc = geometry.channels;

  PatchMatrix rebuilt(patches.rows(), static_cast<Eigen::Index>(indices.size()));
  std::atomic<int> fully_dropped{0};
  parallel_for(indices.size(), [&](std::size_t k) {
    const int idx = indices[k];
    const int r0 = rows[static_cast<std::size_t>(idx) / cols.size()];
    const int c0 = cols[static_cast<std::size_t>(idx) % cols.size()];
    std::vector<std::uint8_t> kept(static_cast<std::size_t>(patches.rows()));
    std::size_t any = 0;
    std::size_t pos = 0;
    for (int dr = 0; dr < p; ++dr) {
      for (int dc = 0; dc < p; ++dc) {
        const bool keep = mask.kept(r0 + dr, c0 + dc);
        any += keep;
        for (int ch = 0; ch < nc; ++ch) kept[pos++] = keep ? 1 : 0;
      }
    }
    std::span<const std::uint8_t> rows_kept = kept;
    if (any == 0) {
      rows_kept = {};
      ++fully_dropped;
    }
    const SparseCode code = omp(dict, patches.col(idx), config.sparsity, rows_kept);
    rebuilt.col(static_cast<Eigen::Index>(k)) = reconstruct_code(dict, code);
  });

  if (stats) {
    stats->patches_coded += static_cast<int>(indices.size());
    stats->fully_dropped_patches += fully_dropped.load();
  }
  return assemble_patches(rebuilt, geometry, indices);
}

Image splice(const Image& image, const Image& polished, const PixelMask& region) {
  Image out = image;
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      if (!region.kept(r, c)) continue;
      for (int ch = 0; ch < image.channels(); ++ch) out.at(r, c, ch) = polished.at(r, c, ch);
    }
  }
  return out;
}

} // namespace

Image polish_pca(const Image& image, const Dictionary& dict, const PolishConfig& config) {
  config.validate();
  check_pca(image, dict);
  const DenseCode code = project_ls(dict, vectorize(image));
  Image out = devectorize(reconstruct_code(dict, code), image.height(), image.width(),
                          image.channels());
  out.clip();
  return out;
}

Image polish_ksvd(const Image& image, const Dictionary& dict, const PolishConfig& config,
                  PolishStats* stats) {
  config.validate();
  const PatchGeometry geometry = check_ksvd(image, dict);
  std::vector<int> all(static_cast<std::size_t>(geometry.patch_count()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return code_patches(image, dict, config, geometry, all, stats);
}

Image polish_partial(const Image& image, const Dictionary& dict, const PolishConfig& config,
                     PolishStats* stats) {
  config.validate();
  if (!config.region) return polish(image, dict, config, stats);
  const PixelMask& region = *config.region;
  if (!region.matches(image)) {
    throw DimensionError("region mask " + std::to_string(region.height()) + "x" +
                         std::to_string(region.width()) + " does not match image " +
                         shape(image));
  }
  if (region.kept_count() == 0) {
    if (stats) stats->empty_region = true;
    return image;
  }

  if (dict.kind() == DictionaryKind::Pca && dict.geometry().is_global()) {
    return splice(image, polish_pca(image, dict, config), region);
  }

  const PatchGeometry geometry = check_ksvd(image, dict);
  const auto rows = geometry.row_origins();
  const auto cols = geometry.col_origins();
  const int p = geometry.patch_size;
  std::vector<int> touching;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      bool hit = false;
      for (int dr = 0; dr < p && !hit; ++dr) {
        for (int dc = 0; dc < p && !hit; ++dc) hit = region.kept(rows[i] + dr, cols[j] + dc);
      }
      if (hit) touching.push_back(static_cast<int>(i * cols.size() + j));
    }
  }
  return splice(image, code_patches(image, dict, config, geometry, touching, stats), region);
}

Image polish(const Image& image, const Dictionary& dict, const PolishConfig& config,
             PolishStats* stats) {
  if (config.region) return polish_partial(image, dict, config, stats);
  if (config.method == PolishMethod::Pca) return polish_pca(image, dict, config);
  return polish_ksvd(image, dict, config, stats);
}

} // namespace fakepolisher
