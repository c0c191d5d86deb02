#include "fakepolisher/spectrum.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/filters.hpp"

namespace fakepolisher {

namespace {

// FFTW's planner is not thread-safe; execution of a private plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};

using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer allocate(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (!p) throw std::bad_alloc();
  return FftwBuffer(p);
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

} // namespace

Eigen::MatrixXcd dft2(const Eigen::MatrixXd& grid) {
  const int h = static_cast<int>(grid.rows());
  const int w = static_cast<int>(grid.cols());
  if (h < 1 || w < 1) throw ParameterError("cannot transform an empty grid");
  const auto n = static_cast<std::size_t>(h) * static_cast<std::size_t>(w);
  auto in = allocate(n);
  auto out = allocate(n);

  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(h, w, in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE);
  }
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      auto& cell = in[static_cast<std::size_t>(r) * static_cast<std::size_t>(w) + static_cast<std::size_t>(c)];
      cell[0] = grid(r, c);
      cell[1] = 0.0;
    }
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  Eigen::MatrixXcd f(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const auto& cell = out[static_cast<std::size_t>(r) * static_cast<std::size_t>(w) + static_cast<std::size_t>(c)];
      f(r, c) = {cell[0], cell[1]};
    }
  }
  return f;
}

Eigen::MatrixXd gray_plane(const Image& image) {
  const Image gray = to_grayscale(image);
  Eigen::MatrixXd plane(gray.height(), gray.width());
  for (int r = 0; r < gray.height(); ++r) {
    for (int c = 0; c < gray.width(); ++c) plane(r, c) = gray.at(r, c);
  }
  return plane;
}

double blob_energy_ratio(const Eigen::MatrixXd& power) {
  const int h = static_cast<int>(power.rows());
  const int w = static_cast<int>(power.cols());
  // 0 = other, 1 = DC window, 2 = blob window (DC wins where they overlap)
  Eigen::MatrixXi label = Eigen::MatrixXi::Zero(h, w);
  const int sites[4][2] = {{h / 4, w / 4}, {h / 4, (3 * w) / 4}, {(3 * h) / 4, w / 4},
                           {(3 * h) / 4, (3 * w) / 4}};
  for (const auto& s : sites) {
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) label(wrap(s[0] + dr, h), wrap(s[1] + dc, w)) = 2;
    }
  }
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) label(wrap(dr, h), wrap(dc, w)) = 1;
  }

  double blob = 0.0;
  double non_dc = 0.0;
  for (int c = 0; c < w; ++c) {
    for (int r = 0; r < h; ++r) {
      if (label(r, c) == 1) continue;
      non_dc += power(r, c);
      if (label(r, c) == 2) blob += power(r, c);
    }
  }
  if (!(non_dc > 0.0)) return 0.0;
  return std::clamp(blob / non_dc, 0.0, 1.0);
}

SpectrumReport spectrum(const Image& image) {
  const Eigen::MatrixXcd f = dft2(gray_plane(image));
  const int h = static_cast<int>(f.rows());
  const int w = static_cast<int>(f.cols());

  SpectrumReport report;
  report.log_magnitude.resize(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      report.log_magnitude((r + h / 2) % h, (c + w / 2) % w) = std::log1p(std::abs(f(r, c)));
    }
  }
  report.blob_energy_ratio = blob_energy_ratio(f.cwiseAbs2());
  report.blob_sites = {{0.25, 0.25}, {0.25, 0.75}, {0.75, 0.25}, {0.75, 0.75}};
  return report;
}

Image spectrum_image(const SpectrumReport& report) {
  const auto& lm = report.log_magnitude;
  const double lo = lm.minCoeff();
  const double span = lm.maxCoeff() - lo;
  Image out(static_cast<int>(lm.rows()), static_cast<int>(lm.cols()), 1);
  for (int r = 0; r < lm.rows(); ++r) {
    for (int c = 0; c < lm.cols(); ++c) out.at(r, c) = span > 0.0 ? (lm(r, c) - lo) / span : 0.0;
  }
  return out;
}

std::vector<long> histogram(const Image& image, int bins) {
  if (bins < 2) throw ParameterError("histogram needs at least 2 bins");
  const Image gray = to_grayscale(image);
  std::vector<long> counts(static_cast<std::size_t>(bins), 0);
  for (double v : gray.values()) {
    const auto b = static_cast<long>(std::floor(std::clamp(v, 0.0, 1.0) * bins));
    ++counts[static_cast<std::size_t>(std::min<long>(b, bins - 1))];
  }
  return counts;
}

std::vector<int> histogram_peaks(const std::vector<long>& counts) {
  std::vector<int> peaks;
  const int n = static_cast<int>(counts.size());
  for (int i = 0; i < n; ++i) {
    const long v = counts[static_cast<std::size_t>(i)];
    if (v <= 0) continue;
    const long left = i > 0 ? counts[static_cast<std::size_t>(i - 1)] : 0;
    if (v <= left) continue;
    // extend across a plateau, then require a strict drop
    int j = i;
    while (j + 1 < n && counts[static_cast<std::size_t>(j + 1)] == v) ++j;
    const long right = j + 1 < n ? counts[static_cast<std::size_t>(j + 1)] : 0;
    if (v > right) peaks.push_back(i);
    i = j;
  }
  return peaks;
}

} // namespace fakepolisher
