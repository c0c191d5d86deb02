#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace fakepolisher {

/// Seeded generator with platform-independent draws. The standard
/// distributions are implementation-defined, so bounded integers, uniforms
/// and normals are derived here directly from mt19937_64 output.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi_inclusive);
  /// Standard normal (Box-Muller, no cached second value).
  double normal();

private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed for item `index` of a seeded family.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

} // namespace fakepolisher
