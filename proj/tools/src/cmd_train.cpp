#include <filesystem>

#include "commands.hpp"
#include "corpus.hpp"
#include "fakepolisher/dictionary_io.hpp"
#include "fakepolisher/dictlearn.hpp"
#include "fakepolisher/patches.hpp"
#include "fakepolisher/sparse_coding.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fakepolisher::cli {

namespace {

struct TrainOptions {
  std::string method;
  std::optional<int> components;
  std::string in;
  std::string out;
  int patch = 8;
  int stride = 4;
  int sparsity = 15;
  int iters = 10;
  std::uint64_t seed = 0;
  double tolerance = 1e-4;
};

PatchMatrix global_samples(const std::vector<Image>& images) {
  PatchMatrix y(static_cast<Eigen::Index>(images.front().size()),
                static_cast<Eigen::Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) y.col(static_cast<Eigen::Index>(i)) = vectorize(images[i]);
  return y;
}

PatchMatrix patch_samples(const std::vector<Image>& images, int patch, int stride) {
  const PatchGeometry g = make_geometry(images.front(), patch, stride);
  PatchMatrix y(g.patch_dim(), g.patch_count() * static_cast<Eigen::Index>(images.size()));
  for (std::size_t i = 0; i < images.size(); ++i) {
    y.middleCols(static_cast<Eigen::Index>(i) * g.patch_count(), g.patch_count()) = extract_patches(images[i], g);
  }
  return y;
}

int run_train(const TrainOptions& o, Context& ctx) {
  const bool pca = o.method == "pca";
  const int components = o.components.value_or(pca ? 100 : 256);
  if (!pca && o.sparsity > components) {
    throw UsageError("--sparsity must not exceed --components");
  }

  const Corpus corpus = load_corpus(o.in);
  const Image& first = corpus.images.front();
  ctx.out << "train: loaded " << corpus.images.size() << " images of " << first.height() << "x"
          << first.width() << "x" << first.channels() << '\n';

  RunManifest m = new_manifest("train", o.seed);
  m.parameters = {{"method", o.method}, {"components", std::to_string(components)}, {"in", o.in},
                  {"out", o.out}, {"seed", std::to_string(o.seed)}};
  m.inputs = path_strings(corpus.files);
  m.outputs = {o.out};

  std::optional<Dictionary> dict;
  double relative_error = 0.0;
  if (pca) {
    const PatchMatrix y = global_samples(corpus.images);
    dict.emplace(train_pca(y, components,
                           DictionaryGeometry::global(first.height(), first.width(), first.channels())));
    const Eigen::MatrixXd centered = y.colwise() - dict->mean();
    const Eigen::MatrixXd residual = centered - dict->atoms() * (dict->atoms().transpose() * centered);
    relative_error = residual.norm() / y.norm();
    m.details = {{"n_train", y.cols()}, {"dim", y.rows()}, {"atoms", dict->size()},
                 {"relative_error", relative_error}};
  } else {
    if (o.patch > std::min(first.height(), first.width())) {
      throw UsageError("--patch exceeds the image size");
    }
    for (const auto& [k, v] : std::initializer_list<std::pair<const char*, std::string>>{
           {"patch", std::to_string(o.patch)}, {"stride", std::to_string(o.stride)},
           {"sparsity", std::to_string(o.sparsity)}, {"iters", std::to_string(o.iters)},
           {"tolerance", format_double(o.tolerance)}}) {
      m.parameters[k] = v;
    }
    const PatchMatrix y = patch_samples(corpus.images, o.patch, o.stride);
    TrainConfig cfg;
    cfg.components = components;
    cfg.sparsity = o.sparsity;
    cfg.iterations = o.iters;
    cfg.seed = o.seed;
    cfg.tolerance = o.tolerance;
    KsvdTrace trace;
    dict.emplace(train_ksvd(y, cfg, DictionaryGeometry::patches(o.patch, o.stride, first.channels()), &trace));
    for (const auto& w : trace.warnings) ctx.err << "warning: " << w << '\n';
    const double final_error = trace.rounds.empty() ? trace.initial_error : trace.rounds.back().update_error;
    relative_error = final_error / y.norm();
    Json rounds = Json::array();
    for (const auto& r : trace.rounds) {
      rounds.push_back({{"coding_error", r.coding_error}, {"update_error", r.update_error},
                        {"replaced_atoms", r.replaced_atoms}});
      ctx.out << "train: round " << rounds.size() << " error " << r.update_error << '\n';
    }
    m.details = {{"n_train", y.cols()}, {"dim", y.rows()}, {"atoms", dict->size()},
                 {"initial_error", trace.initial_error}, {"rounds", rounds},
                 {"relative_error", relative_error}, {"warnings", trace.warnings}};
  }

  save_dictionary(*dict, o.out);
  write_manifest(o.out + ".manifest.json", m);
  ctx.out << "train: " << o.method << " dictionary " << dict->dim() << "x" << dict->size()
          << ", final relative error " << relative_error << '\n';
  return 0;
}

} // namespace

Command add_train(CLI::App& root, Context& ctx) {
  auto o = std::make_shared<TrainOptions>();
  auto* app = root.add_subcommand("train", "Learn a PCA or K-SVD dictionary from a corpus");
  app->add_option("--method", o->method, "pca or ksvd")->required()->check(CLI::IsMember({"pca", "ksvd"}));
  app->add_option("--components", o->components, "Atoms to learn (default 100 for pca, 256 for ksvd)")
    ->check(CLI::PositiveNumber);
  app->add_option("--in", o->in, "Corpus directory")->required();
  app->add_option("--out", o->out, "Dictionary file to write")->required();
  app->add_option("--patch", o->patch, "K-SVD patch side")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--stride", o->stride, "K-SVD patch stride")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--sparsity", o->sparsity, "K-SVD training sparsity K")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--iters", o->iters, "K-SVD rounds")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--seed", o->seed, "Training seed")->capture_default_str();
  app->add_option("--tolerance", o->tolerance, "Relative improvement stop threshold")
    ->capture_default_str()->check(CLI::NonNegativeNumber);
  return {app, [o, &ctx] { return run_train(*o, ctx); }};
}

} // namespace fakepolisher::cli
