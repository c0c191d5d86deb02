#pragma once

// Independent reference computations for the unit and acceptance tests. None
// of these call into the library routines they are used to check.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <set>
#include <vector>

#include "fakepolisher/random.hpp"

namespace oracle {

/// Patch origins along one axis by exhaustive enumeration: every position the
/// patch fits at that is a stride multiple, plus the flush-right position.
inline std::vector<int> enumerate_origins(int length, int patch, int stride) {
  std::set<int> out;
  for (int p = 0; p + patch <= length; ++p) {
    if (p % stride == 0 || p == length - patch) out.insert(p);
  }
  return {out.begin(), out.end()};
}

/// Plain O(N^2) 2-D DFT, unnormalized forward transform.
inline Eigen::MatrixXcd naive_dft2(const Eigen::MatrixXd& x) {
  const auto h = x.rows();
  const auto w = x.cols();
  Eigen::MatrixXcd f(h, w);
  for (Eigen::Index u = 0; u < h; ++u) {
    for (Eigen::Index v = 0; v < w; ++v) {
      std::complex<double> acc = 0.0;
      for (Eigen::Index r = 0; r < h; ++r) {
        for (Eigen::Index c = 0; c < w; ++c) {
          const double angle = -2.0 * std::numbers::pi *
                               (static_cast<double>(u * r) / static_cast<double>(h) +
                                static_cast<double>(v * c) / static_cast<double>(w));
          acc += x(r, c) * std::polar(1.0, angle);
        }
      }
      f(u, v) = acc;
    }
  }
  return f;
}

/// Least squares through a QR of the design matrix (no normal equations).
inline Eigen::VectorXd lstsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  return a.householderQr().solve(b);
}

/// Weighted least squares as ordinary least squares on (S A, S b).
inline Eigen::VectorXd weighted_lstsq(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                      const Eigen::VectorXd& s) {
  return lstsq(s.asDiagonal() * a, s.asDiagonal() * b);
}

struct SubsetFit {
  std::vector<int> support; ///< ascending
  Eigen::VectorXd values;
  double residual = std::numeric_limits<double>::infinity();
};

/// Best k-atom least-squares fit over all C(m, k) supports.
inline SubsetFit best_subset(const Eigen::MatrixXd& atoms, const Eigen::VectorXd& y, int k) {
  const int m = static_cast<int>(atoms.cols());
  SubsetFit best;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Eigen::MatrixXd sub(atoms.rows(), k);
    for (int i = 0; i < k; ++i) sub.col(i) = atoms.col(pick[static_cast<std::size_t>(i)]);
    const Eigen::VectorXd x = lstsq(sub, y);
    const double res = (y - sub * x).norm();
    if (res < best.residual) best = {pick, x, res};
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return best;
}

inline Eigen::MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols, fakepolisher::Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.normal();
  }
  return m;
}

inline Eigen::MatrixXd random_unit_columns(Eigen::Index rows, Eigen::Index cols,
                                           fakepolisher::Rng& rng) {
  Eigen::MatrixXd m = random_matrix(rows, cols, rng);
  m.colwise().normalize();
  return m;
}

/// Random orthonormal columns via QR of a Gaussian matrix.
inline Eigen::MatrixXd random_orthonormal(Eigen::Index rows, Eigen::Index cols,
                                          fakepolisher::Rng& rng) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_matrix(rows, cols, rng));
  return qr.householderQ() * Eigen::MatrixXd::Identity(rows, cols);
}

/// 2-D normalized Gaussian kernel evaluated directly on the grid.
inline Eigen::MatrixXd gaussian_kernel_2d(int size, double sigma) {
  const int r = size / 2;
  Eigen::MatrixXd k(size, size);
  for (int i = -r; i <= r; ++i) {
    for (int j = -r; j <= r; ++j) k(i + r, j + r) = std::exp(-(i * i + j * j) / (2 * sigma * sigma));
  }
  return k / k.sum();
}

/// Deterministic 32x32 texture shared with the frozen SSIM reference values.
inline Eigen::MatrixXd reference_texture() {
  Eigen::MatrixXd a(32, 32);
  for (int r = 0; r < 32; ++r) {
    for (int c = 0; c < 32; ++c) {
      const double v = 0.5 + 0.5 * std::sin(0.7 * r + 1.3 * c) * std::cos(0.045 * r * c);
      a(r, c) = std::clamp(v, 0.0, 1.0);
    }
  }
  return a;
}

} // namespace oracle
