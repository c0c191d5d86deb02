#include <benchmark/benchmark.h>

#include "fakepolisher/fakepolisher.hpp"

using namespace fakepolisher;

namespace {

Eigen::MatrixXd random_columns(Eigen::Index d, Eigen::Index n, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(d, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = rng.normal();
  }
  return m;
}

Eigen::MatrixXd unit_columns(Eigen::Index d, Eigen::Index n, std::uint64_t seed) {
  Eigen::MatrixXd m = random_columns(d, n, seed);
  m.colwise().normalize();
  return m;
}

PatchMatrix stack_patches(const std::vector<Image>& images, int patch, int stride) {
  const PatchGeometry g = make_geometry(images.front(), patch, stride);
  PatchMatrix y(g.patch_dim(), static_cast<Eigen::Index>(g.patch_count()) * static_cast<Eigen::Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    y.middleCols(static_cast<Eigen::Index>(i) * g.patch_count(), g.patch_count()) = extract_patches(images[i], g);
  }
  return y;
}

} // namespace

// 64-dim patch, 256 atoms, tau from the argument
static void BM_Omp(benchmark::State& state) {
  const Eigen::MatrixXd atoms = unit_columns(64, 256, 1);
  const Eigen::VectorXd y = random_columns(64, 1, 2).col(0);
  const int tau = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(omp(atoms, y, tau));
}
BENCHMARK(BM_Omp)->Arg(5)->Arg(15)->Arg(20);

static void BM_OmpMasked(benchmark::State& state) {
  const Eigen::MatrixXd atoms = unit_columns(64, 256, 1);
  const Eigen::VectorXd y = random_columns(64, 1, 2).col(0);
  std::vector<std::uint8_t> kept(64, 1);
  for (int r = 0; r < 64; r += 10) kept[static_cast<std::size_t>(r)] = 0;
  for (auto _ : state) benchmark::DoNotOptimize(omp(atoms, y, 20, kept));
}
BENCHMARK(BM_OmpMasked);

static void BM_ProjectLsPca(benchmark::State& state) {
  const auto corpus = generate_clean_corpus(200, 32, 1, 7);
  PatchMatrix y(1024, 200);
  for (int i = 0; i < 200; ++i) y.col(i) = vectorize(corpus[static_cast<std::size_t>(i)]);
  const Dictionary dict = train_pca(y, 100);
  const Eigen::VectorXd v = y.col(3);
  for (auto _ : state) benchmark::DoNotOptimize(project_ls(dict, v));
}
BENCHMARK(BM_ProjectLsPca);

static void BM_ProjectWeighted(benchmark::State& state) {
  const Dictionary dict(DictionaryKind::Ksvd, unit_columns(64, 32, 3), Eigen::VectorXd::Zero(64), {}, {});
  const Eigen::VectorXd y = random_columns(64, 1, 4).col(0);
  const SelectorVector s(random_columns(64, 1, 5).col(0).cwiseAbs());
  for (auto _ : state) benchmark::DoNotOptimize(project_weighted(dict, y, s));
}
BENCHMARK(BM_ProjectWeighted);

static void BM_PolishKsvd(benchmark::State& state) {
  const auto train = generate_clean_corpus(20, 32, 1, 7);
  TrainConfig cfg;
  cfg.components = 256;
  cfg.sparsity = 15;
  cfg.iterations = 2;
  const Dictionary dict = train_ksvd(stack_patches(train, 8, 4), cfg, DictionaryGeometry::patches(8, 4, 1));
  const Image fake = inject_artifact(clean_image(200, 32, 1, 7), {ArtifactType::Checkerboard, 0.3, 4}, 0);
  for (auto _ : state) benchmark::DoNotOptimize(polish_ksvd(fake, dict, PolishConfig::ksvd()));
}
BENCHMARK(BM_PolishKsvd)->Unit(benchmark::kMillisecond);

static void BM_Spectrum(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const Image img = clean_image(0, n, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(img));
}
BENCHMARK(BM_Spectrum)->Arg(32)->Arg(64)->Arg(256);

static void BM_Ssim(benchmark::State& state) {
  const Image a = clean_image(0, 64, 3, 1);
  const Image b = clean_image(1, 64, 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ssim(a, b));
}
BENCHMARK(BM_Ssim);
BENCHMARK_MAIN();
