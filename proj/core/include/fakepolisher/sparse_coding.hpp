#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "fakepolisher/dictionary.hpp"

namespace fakepolisher {

/// Coefficients on the atoms listed in `support`, in selection order.
struct SparseCode {
  std::vector<int> support;
  std::vector<double> values;
  int dict_size = 0;

  Eigen::VectorXd dense() const;
};

struct DenseCode {
  Eigen::VectorXd values;
  bool regularized = false; ///< solved with the ridge fallback
};

/// Nonnegative per-dimension weights; at least one must be positive.
class SelectorVector {
public:
  explicit SelectorVector(Eigen::VectorXd weights);
  static SelectorVector ones(int dim) { return SelectorVector(Eigen::VectorXd::Ones(dim)); }
  /// Binary selector from a row mask (nonzero = selected).
  static SelectorVector from_mask(std::span<const std::uint8_t> rows);

  const Eigen::VectorXd& weights() const noexcept { return weights_; }

private:
  Eigen::VectorXd weights_;
};

struct OmpTrace {
  /// Kept-row residual norm before the first selection and after each one.
  std::vector<double> residual_norms;
};

/// Residual norm at or below which pursuit stops.
inline constexpr double kOmpResidualTolerance = 1e-10;

/// Orthogonal matching pursuit of `signal` on the columns of `atoms`.
///
/// `kept_rows` optionally restricts the fit to rows flagged nonzero; atoms are
/// renormalized on those rows before correlating. Stops at `sparsity` atoms,
/// when the residual norm is <= kOmpResidualTolerance, or when no unselected
/// atom has a nonzero kept-row norm or correlation. Ties go to the lower index.
SparseCode omp(const Eigen::MatrixXd& atoms, const Eigen::Ref<const Eigen::VectorXd>& signal,
               int sparsity, std::span<const std::uint8_t> kept_rows = {},
               OmpTrace* trace = nullptr);

/// OMP of (signal - mean) on the dictionary atoms.
SparseCode omp(const Dictionary& dict, const Eigen::Ref<const Eigen::VectorXd>& signal,
               int sparsity, std::span<const std::uint8_t> kept_rows = {},
               OmpTrace* trace = nullptr);

/// x = (D^T D)^{-1} D^T (y - mean); D^T (y - mean) for PCA dictionaries.
DenseCode project_ls(const Dictionary& dict, const Eigen::Ref<const Eigen::VectorXd>& signal);

/// x = [D^T S^T S D]^{-1} D^T S^T S (y - mean) with S = diag(s).
DenseCode project_weighted(const Dictionary& dict,
                           const Eigen::Ref<const Eigen::VectorXd>& signal,
                           const SelectorVector& selector);

/// y = D x + mean.
Eigen::VectorXd reconstruct_code(const Dictionary& dict, const SparseCode& code);
Eigen::VectorXd reconstruct_code(const Dictionary& dict, const DenseCode& code);

} // namespace fakepolisher
