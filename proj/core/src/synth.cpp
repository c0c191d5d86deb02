#include "fakepolisher/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/random.hpp"

namespace fakepolisher {

const char* to_string(ArtifactType type) noexcept {
  switch (type) {
  case ArtifactType::Checkerboard: return "checkerboard";
  case ArtifactType::UnpoolingZeroFill: return "unpooling";
  case ArtifactType::InterpolationPeriodicity: return "interpolation";
  }
  return "unknown";
}

ArtifactType parse_artifact_type(std::string_view name) {
  if (name == "checkerboard" || name == "transpose_conv_checkerboard") {
    return ArtifactType::Checkerboard;
  }
  if (name == "unpooling" || name == "unpooling_zerofill") return ArtifactType::UnpoolingZeroFill;
  if (name == "interpolation" || name == "interpolation_periodicity") {
    return ArtifactType::InterpolationPeriodicity;
  }
  throw ParameterError("unknown artifact kind '" + std::string(name) + "'");
}

namespace {

constexpr int kMaxCycles = 4; // lowest allowed period is size / 4

struct Wave {
  int fx;
  int fy;
  double amplitude;
  double phase;
};

Wave random_wave(Rng& rng) {
  for (;;) {
    const int fx = rng.uniform_int(-kMaxCycles, kMaxCycles);
    const int fy = rng.uniform_int(0, kMaxCycles);
    if (fx * fx + fy * fy > kMaxCycles * kMaxCycles) continue;
    if (fy == 0 && fx <= 0) continue; // one representative per +-frequency pair, no DC
    return {fx, fy, rng.uniform(0.2, 1.0), rng.uniform(0.0, 2.0 * std::numbers::pi)};
  }
}

} // namespace

Image clean_image(int index, int size, int channels, std::uint64_t seed) {
  if (size < 1) throw ParameterError("image size must be positive");
  if (index < 0) throw ParameterError("image index must be nonnegative");
  Rng rng(derive_seed(seed, static_cast<std::uint64_t>(index)));
  Image img(size, size, channels);
  const double n = size;
  for (int ch = 0; ch < channels; ++ch) {
    const int waves = rng.uniform_int(4, 8);
    for (int k = 0; k < waves; ++k) {
      const Wave wave = random_wave(rng);
      for (int r = 0; r < size; ++r) {
        for (int c = 0; c < size; ++c) {
          img.at(r, c, ch) += wave.amplitude *
                              std::cos(2.0 * std::numbers::pi * (wave.fx * c + wave.fy * r) / n +
                                       wave.phase);
        }
      }
    }
    const double cy = rng.uniform(0.0, n);
    const double cx = rng.uniform(0.0, n);
    const double slope = rng.uniform(-1.0, 1.0);
    for (int r = 0; r < size; ++r) {
      for (int c = 0; c < size; ++c) img.at(r, c, ch) += slope * std::hypot(r - cy, c - cx) / n;
    }
  }
  const auto [lo, hi] = std::minmax_element(img.values().begin(), img.values().end());
  const double low = *lo;
  const double span = *hi - *lo;
  for (auto& v : img.values()) v = span > 0.0 ? (v - low) / span : 0.5;
  img.clip();
  return img;
}

std::vector<Image> generate_clean_corpus(int n, int size, int channels, std::uint64_t seed,
                                         int first_index) {
  if (n < 1) throw ParameterError("corpus size must be >= 1");
  std::vector<Image> corpus;
  corpus.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) corpus.push_back(clean_image(first_index + i, size, channels, seed));
  return corpus;
}

Image inject_artifact(const Image& image, const ArtifactKind& artifact, std::uint64_t /*seed*/) {
  const int p = artifact.period;
  if (p != 2 && p != 4 && p != 8) throw ParameterError("artifact period must be 2, 4 or 8");
  if (!(artifact.strength >= 0.0 && artifact.strength <= 1.0)) {
    throw ParameterError("artifact strength must lie in [0, 1]");
  }
  if (image.height() % p != 0 || image.width() % p != 0) {
    throw ParameterError("artifact period " + std::to_string(p) + " does not divide image size " +
                         std::to_string(image.height()) + "x" + std::to_string(image.width()));
  }
  if (artifact.strength == 0.0) return image;

  const double s = artifact.strength;
  const int h = image.height();
  const int w = image.width();
  const int nc = image.channels();
  Image out = image;

  switch (artifact.type) {
  case ArtifactType::Checkerboard: {
    const int half = p / 2;
    const double amp = 0.5 * s;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const double sign = ((r / half + c / half) % 2 == 0) ? 1.0 : -1.0;
        for (int ch = 0; ch < nc; ++ch) out.at(r, c, ch) += amp * sign;
      }
    }
    break;
  }
  case ArtifactType::UnpoolingZeroFill: {
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        const bool anchor = r % p == 0 && c % p == 0;
        for (int ch = 0; ch < nc; ++ch) {
          const double v = image.at(r, c, ch);
          out.at(r, c, ch) = (1.0 - s) * v + s * (anchor ? v : 0.0);
        }
      }
    }
    break;
  }
  case ArtifactType::InterpolationPeriodicity: {
    Image small(h / p, w / p, nc);
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        for (int ch = 0; ch < nc; ++ch) small.at(r / p, c / p, ch) += image.at(r, c, ch);
      }
    }
    for (auto& v : small.values()) v /= p * p;
    const Image up = resize_bilinear(small, h, w);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out.values()[i] = (1.0 - s) * image.values()[i] + s * up.values()[i];
    }
    break;
  }
  }
  out.clip();
  return out;
}

Image make_checkerboard(int cells, const Rgb& color_a, const Rgb& color_b) {
  if (cells < 2) throw ParameterError("checkerboard needs at least 2 cells per side");
  Image img(cells, cells, 3);
  for (int r = 0; r < cells; ++r) {
    for (int c = 0; c < cells; ++c) {
      const Rgb& color = (r + c) % 2 == 0 ? color_a : color_b;
      for (int ch = 0; ch < 3; ++ch) img.at(r, c, ch) = color[static_cast<std::size_t>(ch)];
    }
  }
  return img;
}

namespace {

struct Tap {
  int lo;
  int hi;
  double frac;
};

// Half-pixel-center source coordinate of output index i, clamped to the grid.
Tap source_tap(int i, int in_size, int out_size) {
  double src = (i + 0.5) * static_cast<double>(in_size) / out_size - 0.5;
  src = std::clamp(src, 0.0, static_cast<double>(in_size - 1));
  const int lo = static_cast<int>(std::floor(src));
  const int hi = std::min(lo + 1, in_size - 1);
  return {lo, hi, src - lo};
}

void check_size(int new_height, int new_width) {
  if (new_height < 1 || new_width < 1) throw ParameterError("resize target must be >= 1x1");
}

} // namespace

Image resize_bilinear(const Image& image, int new_height, int new_width) {
  check_size(new_height, new_width);
  Image out(new_height, new_width, image.channels());
  for (int r = 0; r < new_height; ++r) {
    const Tap ty = source_tap(r, image.height(), new_height);
    for (int c = 0; c < new_width; ++c) {
      const Tap tx = source_tap(c, image.width(), new_width);
      for (int ch = 0; ch < image.channels(); ++ch) {
        // a + f (b - a) form keeps constants and identity resizes exact.
        const double a = image.at(ty.lo, tx.lo, ch);
        const double b = image.at(ty.lo, tx.hi, ch);
        const double cc = image.at(ty.hi, tx.lo, ch);
        const double d = image.at(ty.hi, tx.hi, ch);
        const double top = a + tx.frac * (b - a);
        const double bottom = cc + tx.frac * (d - cc);
        out.at(r, c, ch) = top + ty.frac * (bottom - top);
      }
    }
  }
  out.clip();
  return out;
}

Image resize_nearest(const Image& image, int new_height, int new_width) {
  check_size(new_height, new_width);
  Image out(new_height, new_width, image.channels());
  for (int r = 0; r < new_height; ++r) {
    const int sr = std::min(image.height() - 1,
                            static_cast<int>((r + 0.5) * image.height() / new_height));
    for (int c = 0; c < new_width; ++c) {
      const int sc = std::min(image.width() - 1,
                              static_cast<int>((c + 0.5) * image.width() / new_width));
      for (int ch = 0; ch < image.channels(); ++ch) out.at(r, c, ch) = image.at(sr, sc, ch);
    }
  }
  return out;
}

} // namespace fakepolisher
