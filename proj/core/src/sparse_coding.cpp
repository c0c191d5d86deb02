#include "fakepolisher/sparse_coding.hpp"

#include <Eigen/Cholesky>
#include <Eigen/QR>

#include <cmath>
#include <string>

#include "fakepolisher/errors.hpp"

namespace fakepolisher {

namespace {

// Atoms whose kept-row norm falls below this are treated as absent.
constexpr double kNegligibleNorm = 1e-12;
// A best correlation this small relative to the residual means the residual
// is numerically orthogonal to every remaining atom.
constexpr double kNegligibleCorrelation = 1e-12;

void check_signal(Eigen::Index dim, Eigen::Index length) {
  if (dim != length) {
    throw DimensionError("signal has length " + std::to_string(length) +
                         ", dictionary dimension is " + std::to_string(dim));
  }
}

struct SolveResult {
  Eigen::VectorXd x;
  bool regularized = false;
};

SolveResult solve_gram(const Eigen::MatrixXd& gram, const Eigen::VectorXd& rhs) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const Eigen::VectorXd pivots = ldlt.vectorD();
  // rcond() can miss an exactly zero pivot, so check the pivot spread as well
  const bool well_posed = ldlt.info() == Eigen::Success && pivots.minCoeff() > 1e-12 * pivots.maxCoeff() &&
                          ldlt.rcond() > 1e-12;
  if (well_posed) {
    return {ldlt.solve(rhs), false};
  }
  const auto m = static_cast<double>(gram.rows());
  double ridge = 1e-10 * gram.trace() / m;
  if (!(ridge > 0.0)) ridge = 1e-10;
  Eigen::MatrixXd shifted = gram;
  shifted.diagonal().array() += ridge;
  return {Eigen::LLT<Eigen::MatrixXd>(shifted).solve(rhs), true};
}

} // namespace

Eigen::VectorXd SparseCode::dense() const {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(dict_size);
  for (std::size_t i = 0; i < support.size(); ++i) x(support[i]) += values[i];
  return x;
}

SelectorVector::SelectorVector(Eigen::VectorXd weights) : weights_{std::move(weights)} {
  if (weights_.size() == 0 || !weights_.allFinite()) {
    throw ParameterError("selector weights must be finite and nonempty");
  }
  if ((weights_.array() < 0.0).any()) throw ParameterError("selector weights must be nonnegative");
  if (!(weights_.array() > 0.0).any()) {
    throw ParameterError("selector must have at least one positive weight");
  }
}

SelectorVector SelectorVector::from_mask(std::span<const std::uint8_t> rows) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) w(static_cast<Eigen::Index>(i)) = rows[i] ? 1.0 : 0.0;
  return SelectorVector(std::move(w));
}

SparseCode omp(const Eigen::MatrixXd& atoms, const Eigen::Ref<const Eigen::VectorXd>& signal,
               int sparsity, std::span<const std::uint8_t> kept_rows, OmpTrace* trace) {
  check_signal(atoms.rows(), signal.size());
  if (sparsity < 1) throw ParameterError("OMP sparsity must be >= 1");

  // Restrict the system to the kept rows.
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  if (kept_rows.empty()) {
    a = atoms;
    b = signal;
  } else {
    if (static_cast<Eigen::Index>(kept_rows.size()) != atoms.rows()) {
      throw DimensionError("row mask has length " + std::to_string(kept_rows.size()) +
                           ", dictionary dimension is " + std::to_string(atoms.rows()));
    }
    Eigen::Index kept = 0;
    for (auto f : kept_rows) kept += f != 0;
    if (kept == 0) throw ParameterError("OMP row mask keeps no rows");
    a.resize(kept, atoms.cols());
    b.resize(kept);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < atoms.rows(); ++i) {
      if (!kept_rows[static_cast<std::size_t>(i)]) continue;
      a.row(k) = atoms.row(i);
      b(k) = signal(i);
      ++k;
    }
  }

  const Eigen::Index m = a.cols();
  const Eigen::VectorXd norms = a.colwise().norm().transpose();
  std::vector<char> selected(static_cast<std::size_t>(m), 0);

  SparseCode code;
  code.dict_size = static_cast<int>(m);
  Eigen::VectorXd residual = b;
  Eigen::VectorXd coeffs;
  Eigen::MatrixXd chosen(a.rows(), 0);
  double rnorm = residual.norm();
  if (trace) trace->residual_norms.assign(1, rnorm);

  while (static_cast<int>(code.support.size()) < sparsity) {
    if (rnorm <= kOmpResidualTolerance) break;

    const Eigen::VectorXd corr = a.transpose() * residual;
    Eigen::Index best = -1;
    double best_score = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      if (selected[static_cast<std::size_t>(j)] || norms(j) <= kNegligibleNorm) continue;
      const double score = std::abs(corr(j)) / norms(j);
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    if (best < 0 || best_score <= kNegligibleCorrelation * rnorm) break;

    selected[static_cast<std::size_t>(best)] = 1;
    code.support.push_back(static_cast<int>(best));
    chosen.conservativeResize(Eigen::NoChange, chosen.cols() + 1);
    chosen.col(chosen.cols() - 1) = a.col(best);

    coeffs = chosen.colPivHouseholderQr().solve(b);
    residual = b - chosen * coeffs;
    rnorm = residual.norm();
    if (trace) trace->residual_norms.push_back(rnorm);
  }

  code.values.assign(coeffs.data(), coeffs.data() + coeffs.size());
  return code;
}

SparseCode omp(const Dictionary& dict, const Eigen::Ref<const Eigen::VectorXd>& signal,
               int sparsity, std::span<const std::uint8_t> kept_rows, OmpTrace* trace) {
  check_signal(dict.dim(), signal.size());
  const Eigen::VectorXd centered = signal - dict.mean();
  return omp(dict.atoms(), centered, sparsity, kept_rows, trace);
}

DenseCode project_ls(const Dictionary& dict, const Eigen::Ref<const Eigen::VectorXd>& signal) {
  check_signal(dict.dim(), signal.size());
  const Eigen::VectorXd centered = signal - dict.mean();
  const auto& atoms = dict.atoms();
  if (dict.kind() == DictionaryKind::Pca) return {atoms.transpose() * centered, false};
  const Eigen::MatrixXd gram = atoms.transpose() * atoms;
  auto solved = solve_gram(gram, atoms.transpose() * centered);
  return {std::move(solved.x), solved.regularized};
}

DenseCode project_weighted(const Dictionary& dict,
                           const Eigen::Ref<const Eigen::VectorXd>& signal,
                           const SelectorVector& selector) {
  check_signal(dict.dim(), signal.size());
  check_signal(dict.dim(), selector.weights().size());
  const Eigen::VectorXd w = selector.weights().array().square();
  const Eigen::VectorXd centered = signal - dict.mean();
  const auto& atoms = dict.atoms();
  const Eigen::MatrixXd weighted = w.asDiagonal() * atoms;
  const Eigen::MatrixXd gram = atoms.transpose() * weighted;
  auto solved = solve_gram(gram, weighted.transpose() * centered);
  return {std::move(solved.x), solved.regularized};
}

Eigen::VectorXd reconstruct_code(const Dictionary& dict, const SparseCode& code) {
  if (code.dict_size != dict.size()) {
    throw DimensionError("sparse code was computed for " + std::to_string(code.dict_size) +
                         " atoms, dictionary has " + std::to_string(dict.size()));
  }
  if (code.support.size() != code.values.size()) {
    throw DimensionError("sparse code support and values differ in length");
  }
  Eigen::VectorXd y = dict.mean();
  for (std::size_t i = 0; i < code.support.size(); ++i) {
    const int j = code.support[i];
    if (j < 0 || j >= dict.size()) throw DimensionError("sparse code index out of range");
    y.noalias() += code.values[i] * dict.atoms().col(j);
  }
  return y;
}

Eigen::VectorXd reconstruct_code(const Dictionary& dict, const DenseCode& code) {
  if (code.values.size() != dict.size()) {
    throw DimensionError("dense code has length " + std::to_string(code.values.size()) +
                         ", dictionary has " + std::to_string(dict.size()) + " atoms");
  }
  return dict.atoms() * code.values + dict.mean();
}

} // namespace fakepolisher
