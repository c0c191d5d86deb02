#pragma once

#include <Eigen/Core>

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "fakepolisher/image.hpp"

namespace fakepolisher {

struct SpectrumReport {
  /// log(1 + |F|), DC shifted to (H/2, W/2).
  Eigen::MatrixXd log_magnitude;
  /// Share of non-DC power inside 3x3 windows at the quarter-frequency sites.
  double blob_energy_ratio = 0.0;
  /// (row, col) fractions of the probed sites.
  std::vector<std::pair<double, double>> blob_sites;
};

/// Unnormalized forward 2-D DFT of a single-channel grid (rows x cols).
Eigen::MatrixXcd dft2(const Eigen::MatrixXd& grid);

/// Grayscale plane of an image as a matrix.
Eigen::MatrixXd gray_plane(const Image& image);

/// Blob ratio from an unshifted power spectrum |F|^2.
double blob_energy_ratio(const Eigen::MatrixXd& power);

SpectrumReport spectrum(const Image& image);

/// Min-max normalized log magnitude as a 1-channel image.
Image spectrum_image(const SpectrumReport& report);

/// Grayscale values binned uniformly over [0,1]; bins are half-open except the
/// last, which includes 1.
std::vector<long> histogram(const Image& image, int bins);

/// Indices of strict local maxima of a histogram (nonzero bins greater than
/// both neighbours; plateaus count once at their first bin).
std::vector<int> histogram_peaks(const std::vector<long>& counts);

} // namespace fakepolisher
