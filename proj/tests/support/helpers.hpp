#pragma once

#include <Eigen/Core>

#include <cmath>

#include "fakepolisher/image.hpp"
#include "fakepolisher/random.hpp"

namespace testing {

inline fakepolisher::Image from_matrix(const Eigen::MatrixXd& m) {
  fakepolisher::Image img(static_cast<int>(m.rows()), static_cast<int>(m.cols()), 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) img.at(r, c) = m(r, c);
  }
  return img;
}

inline fakepolisher::Image random_image(int h, int w, int c, std::uint64_t seed) {
  fakepolisher::Rng rng(seed);
  fakepolisher::Image img(h, w, c);
  for (auto& v : img.values()) v = rng.uniform();
  return img;
}

inline double max_abs_diff(const fakepolisher::Image& a, const fakepolisher::Image& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.values()[i] - b.values()[i]));
  }
  return worst;
}

} // namespace testing
