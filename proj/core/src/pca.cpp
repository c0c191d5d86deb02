#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

#include "fakepolisher/dictlearn.hpp"
#include "fakepolisher/errors.hpp"

namespace fakepolisher {

namespace {

// Flip each column so its largest-magnitude entry (first on ties) is >= 0.
void canonicalize_signs(Eigen::MatrixXd& atoms) {
  for (Eigen::Index j = 0; j < atoms.cols(); ++j) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < atoms.rows(); ++i) {
      const double v = std::abs(atoms(i, j));
      if (v > best) {
        best = v;
        arg = i;
      }
    }
    if (atoms(arg, j) < 0.0) atoms.col(j) = -atoms.col(j);
  }
}

} // namespace

Dictionary train_pca(const PatchMatrix& samples, int components, DictionaryGeometry geometry) {
  const Eigen::Index d = samples.rows();
  const Eigen::Index n = samples.cols();
  if (n < 2) throw ParameterError("PCA needs at least 2 training columns");
  if (components < 1 || components > std::min(d, n)) {
    throw ParameterError("PCA component count " + std::to_string(components) +
                         " outside [1, min(d, n) = " + std::to_string(std::min(d, n)) + "]");
  }
  if (!samples.allFinite()) throw ParameterError("PCA training data contains non-finite values");

  const Eigen::VectorXd mean = samples.rowwise().mean();
  const Eigen::MatrixXd centered = samples.colwise() - mean;

  Eigen::BDCSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  const double cutoff =
    static_cast<double>(std::max(d, n)) * std::numeric_limits<double>::epsilon() * top;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff && sv(rank) > 0.0) ++rank;
  if (rank < components) {
    throw RankError("centered training data has rank " + std::to_string(rank) + ", cannot fit " +
                    std::to_string(components) + " components");
  }

  Eigen::MatrixXd atoms = svd.matrixU().leftCols(components);
  canonicalize_signs(atoms);
  // Column norms are 1 to rounding; renormalize so the stored atoms are exact.
  atoms.colwise().normalize();

  TrainMeta meta;
  meta.n_train = static_cast<std::uint64_t>(n);
  return Dictionary(DictionaryKind::Pca, std::move(atoms), mean, geometry, meta);
}

Eigen::VectorXd explained_variance(const Dictionary& dict, const PatchMatrix& samples) {
  if (samples.rows() != dict.dim()) throw DimensionError("sample dimension mismatch");
  if (samples.cols() < 2) throw ParameterError("need at least 2 samples");
  const Eigen::MatrixXd centered = samples.colwise() - dict.mean();
  const Eigen::MatrixXd projected = dict.atoms().transpose() * centered;
  return projected.rowwise().squaredNorm() / static_cast<double>(samples.cols() - 1);
}

} // namespace fakepolisher
