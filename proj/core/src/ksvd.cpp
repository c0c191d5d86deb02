#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fakepolisher/dictlearn.hpp"
#include "fakepolisher/errors.hpp"
#include "fakepolisher/parallel.hpp"
#include "fakepolisher/random.hpp"
#include "fakepolisher/sparse_coding.hpp"

namespace fakepolisher {

namespace {

Eigen::VectorXd random_unit(Eigen::Index d, Rng& rng) {
  Eigen::VectorXd v(d);
  do {
    for (Eigen::Index i = 0; i < d; ++i) v(i) = rng.normal();
  } while (v.norm() == 0.0);
  return v.normalized();
}

// m distinct training columns drawn uniformly (partial Fisher-Yates), each
// normalized; zero columns and any shortfall (n < m) fall back to random unit
// vectors from the same generator.
Eigen::MatrixXd initial_atoms(const PatchMatrix& samples, int m, Rng& rng) {
  const auto n = static_cast<std::size_t>(samples.cols());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Eigen::MatrixXd atoms(samples.rows(), m);
  for (int j = 0; j < m; ++j) {
    const auto slot = static_cast<std::size_t>(j);
    if (slot < n) {
      std::swap(order[slot], order[slot + rng.uniform_index(n - slot)]);
      const auto column = samples.col(static_cast<Eigen::Index>(order[slot]));
      const double norm = column.norm();
      if (norm > 0.0) {
        atoms.col(j) = column / norm;
        continue;
      }
    }
    atoms.col(j) = random_unit(samples.rows(), rng);
  }
  return atoms;
}

std::vector<SparseCode> code_all(const Eigen::MatrixXd& atoms, const PatchMatrix& samples,
                                 int sparsity) {
  std::vector<SparseCode> codes(static_cast<std::size_t>(samples.cols()));
  parallel_for(codes.size(), [&](std::size_t i) {
    codes[i] = omp(atoms, samples.col(static_cast<Eigen::Index>(i)), sparsity);
  });
  return codes;
}

Eigen::MatrixXd residual(const Eigen::MatrixXd& atoms, const PatchMatrix& samples,
                         const std::vector<SparseCode>& codes) {
  Eigen::MatrixXd r = samples;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    const auto& code = codes[i];
    for (std::size_t k = 0; k < code.support.size(); ++k) {
      r.col(static_cast<Eigen::Index>(i)).noalias() -= code.values[k] * atoms.col(code.support[k]);
    }
  }
  return r;
}

constexpr double kDuplicateCosine = 0.99;

struct Usage {
  Eigen::Index column;
  std::size_t slot; ///< position inside that column's code
};

} // namespace

Dictionary train_ksvd(const PatchMatrix& samples, const TrainConfig& config,
                      DictionaryGeometry geometry, KsvdTrace* trace) {
  const Eigen::Index d = samples.rows();
  const Eigen::Index n = samples.cols();
  const int m = config.components;
  if (m < 1) throw ParameterError("K-SVD needs at least one atom");
  if (config.sparsity < 1) throw ParameterError("K-SVD sparsity must be >= 1");
  if (config.iterations < 1) throw ParameterError("K-SVD iterations must be >= 1");
  if (config.sparsity > d) {
    throw ParameterError("K-SVD sparsity " + std::to_string(config.sparsity) +
                         " exceeds signal dimension " + std::to_string(d));
  }
  if (config.sparsity > m) {
    throw ParameterError("K-SVD sparsity " + std::to_string(config.sparsity) +
                         " exceeds atom count " + std::to_string(m));
  }
  if (n < 1) throw ParameterError("K-SVD needs training data");
  if (!samples.allFinite()) throw ParameterError("K-SVD training data contains non-finite values");
  if (config.sparsity > 65535 || config.iterations > 65535) {
    throw ParameterError("K-SVD sparsity and iterations must fit in 16 bits");
  }

  KsvdTrace local;
  KsvdTrace& t = trace ? *trace : local;
  t = {};
  if (n < m) {
    t.warnings.push_back("only " + std::to_string(n) + " training columns for " +
                         std::to_string(m) + " atoms");
  }

  Rng rng(config.seed);
  Eigen::MatrixXd atoms = initial_atoms(samples, m, rng);
  const Eigen::VectorXd sample_norms = samples.colwise().norm().transpose();

  for (int round = 0; round < config.iterations; ++round) {
    auto codes = code_all(atoms, samples, config.sparsity);
    Eigen::MatrixXd r = residual(atoms, samples, codes);
    KsvdTrace::Round stats;
    stats.coding_error = r.norm();
    if (round == 0) t.initial_error = stats.coding_error;

    std::vector<std::vector<Usage>> users(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t k = 0; k < codes[i].support.size(); ++k) {
        users[static_cast<std::size_t>(codes[i].support[k])].push_back(
          {static_cast<Eigen::Index>(i), k});
      }
    }

    for (int j = 0; j < m; ++j) {
      const auto& uj = users[static_cast<std::size_t>(j)];
      if (uj.empty()) continue;
      // Residual restricted to the columns using atom j, with j's term added back.
      Eigen::MatrixXd e(d, static_cast<Eigen::Index>(uj.size()));
      for (std::size_t u = 0; u < uj.size(); ++u) {
        const double x = codes[static_cast<std::size_t>(uj[u].column)].values[uj[u].slot];
        e.col(static_cast<Eigen::Index>(u)) = r.col(uj[u].column) + x * atoms.col(j);
      }
      // Best rank-1 fit: top left singular vector via the d x d Gram matrix.
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(e * e.transpose());
      Eigen::VectorXd atom = eig.eigenvectors().col(d - 1);
      if (!(eig.eigenvalues()(d - 1) > 0.0) || !atom.allFinite()) {
        atom = atoms.col(j);
      } else {
        atom.normalize();
        if (atom.dot(atoms.col(j)) < 0.0) atom = -atom;
      }
      const Eigen::VectorXd row = e.transpose() * atom;
      atoms.col(j) = atom;
      for (std::size_t u = 0; u < uj.size(); ++u) {
        codes[static_cast<std::size_t>(uj[u].column)].values[uj[u].slot] =
          row(static_cast<Eigen::Index>(u));
        r.col(uj[u].column) = e.col(static_cast<Eigen::Index>(u)) - row(static_cast<Eigen::Index>(u)) * atom;
      }
    }

    stats.update_error = residual(atoms, samples, codes).norm();

    // Unused atoms, and before the last round atoms within |cos| > 0.99 of an
    // earlier atom, restart at the worst-represented training columns.
    // Unused atoms carry no coefficients; duplicates do, so replacing them
    // shows up in the next round's coding error instead.
    const bool last = round + 1 == config.iterations;
    std::vector<int> restart;
    for (int j = 0; j < m; ++j) {
      bool replace = users[static_cast<std::size_t>(j)].empty();
      for (int i = 0; i < j && !replace && !last; ++i) {
        replace = std::abs(atoms.col(i).dot(atoms.col(j))) > kDuplicateCosine;
      }
      if (replace) restart.push_back(j);
    }
    if (!restart.empty()) {
      const Eigen::VectorXd errs = r.colwise().norm().transpose();
      std::vector<Eigen::Index> worst(static_cast<std::size_t>(n));
      std::iota(worst.begin(), worst.end(), Eigen::Index{0});
      std::stable_sort(worst.begin(), worst.end(),
                       [&](Eigen::Index a, Eigen::Index b) { return errs(a) > errs(b); });
      std::size_t next = 0;
      for (int j : restart) {
        while (next < worst.size() && sample_norms(worst[next]) == 0.0) ++next;
        if (next == worst.size()) break;
        atoms.col(j) = samples.col(worst[next]) / sample_norms(worst[next]);
        ++next;
        ++stats.replaced_atoms;
      }
    }

    t.rounds.push_back(stats);

    if (stats.update_error == 0.0) break;
    // restarted atoms can raise the next error, so they defer the stop rule
    if (round > 0 && t.rounds[t.rounds.size() - 2].replaced_atoms == 0) {
      const double previous = t.rounds[t.rounds.size() - 2].update_error;
      if ((previous - stats.update_error) / previous < config.tolerance) break;
    }
  }

  TrainMeta meta;
  meta.n_train = static_cast<std::uint64_t>(n);
  meta.sparsity_k = static_cast<std::uint16_t>(config.sparsity);
  meta.iterations = static_cast<std::uint16_t>(config.iterations);
  meta.seed = config.seed;
  return Dictionary(DictionaryKind::Ksvd, std::move(atoms), Eigen::VectorXd::Zero(d), geometry,
                    meta);
}

} // namespace fakepolisher
