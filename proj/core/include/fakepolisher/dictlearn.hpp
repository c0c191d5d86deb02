#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fakepolisher/dictionary.hpp"
#include "fakepolisher/patches.hpp"

namespace fakepolisher {

struct TrainConfig {
  int components = 256;
  int sparsity = 15;   ///< K-SVD training sparsity K
  int iterations = 10; ///< K-SVD rounds
  std::uint64_t seed = 0;
  double tolerance = 1e-4; ///< stop when relative error improvement drops below
};

/// Frobenius errors ||Y - DX||_F recorded by train_ksvd.
struct KsvdTrace {
  struct Round {
    double coding_error = 0.0; ///< after sparse coding with the current atoms
    double update_error = 0.0; ///< after the atom-update sweep, supports fixed
    int replaced_atoms = 0;
  };
  double initial_error = 0.0; ///< coding error of the initial dictionary
  std::vector<Round> rounds;
  std::vector<std::string> warnings;
};

/// Top-m principal directions of the mean-centered columns of Y, ordered by
/// decreasing singular value, each signed so its largest-magnitude entry is
/// nonnegative. Throws ParameterError for m outside [1, min(d, n)] or n < 2,
/// RankError when the centered data has rank below m.
Dictionary train_pca(const PatchMatrix& samples, int components,
                     DictionaryGeometry geometry = {});

/// Explained variance (squared singular value / (n - 1)) of each PCA atom on
/// `samples`.
Eigen::VectorXd explained_variance(const Dictionary& dict, const PatchMatrix& samples);

/// K-SVD on raw (uncentered) columns of Y.
Dictionary train_ksvd(const PatchMatrix& samples, const TrainConfig& config,
                      DictionaryGeometry geometry = {}, KsvdTrace* trace = nullptr);

/// Keeps `count` atoms. PCA keeps the leading components; K-SVD keeps the
/// atoms carrying the most |coefficient| mass when `reference` is coded at the
/// training sparsity (ties to the lower index), in their original order.
Dictionary subset_atoms(const Dictionary& dict, int count, const PatchMatrix& reference);

} // namespace fakepolisher
