#include <filesystem>

#include "commands.hpp"
#include "corpus.hpp"
#include "fakepolisher/dictionary_io.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher/metrics.hpp"
#include "fakepolisher/polish.hpp"
#include "fakepolisher/spectrum.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fakepolisher::cli {

namespace {

struct EvaluateOptions {
  std::string clean;
  std::string fake;
  std::string dict;
  int tau = 20;
  double dropout = 0.1;
  std::uint64_t seed = 0;
  std::string json;
};

Json check(const char* name, double value, const char* op, double threshold) {
  const bool pass = std::string(op) == "<=" ? value <= threshold : value >= threshold;
  return {{"name", name}, {"value", value}, {"op", op}, {"threshold", threshold}, {"pass", pass}};
}

int run_evaluate(const EvaluateOptions& o, Context& ctx) {
  const Dictionary dict = load_dictionary(o.dict);
  const Corpus clean = load_corpus(o.clean);
  const Corpus fake = load_corpus(o.fake);

  if (clean.files.size() != fake.files.size()) {
    throw DimensionError("unpaired corpora: " + std::to_string(clean.files.size()) + " clean vs " +
                         std::to_string(fake.files.size()) + " fake images");
  }
  for (std::size_t i = 0; i < clean.files.size(); ++i) {
    if (clean.files[i].filename() != fake.files[i].filename()) {
      throw DimensionError("unpaired corpora: " + clean.files[i].filename().string() + " has no partner (found " +
                           fake.files[i].filename().string() + ")");
    }
    if (!clean.images[i].same_shape(fake.images[i])) {
      throw DimensionError("unpaired corpora: " + clean.files[i].filename().string() + " differs in size");
    }
  }

  const bool pca = dict.kind() == DictionaryKind::Pca;
  PolishConfig cfg = pca ? PolishConfig::pca() : PolishConfig::ksvd();
  cfg.sparsity = o.tau;
  if (!pca) cfg.dropout_rate = o.dropout;
  cfg.seed = o.seed;

  RunManifest m = new_manifest("evaluate", o.seed);
  m.parameters = {{"clean", o.clean}, {"fake", o.fake}, {"dict", o.dict}, {"tau", std::to_string(o.tau)},
                  {"dropout", format_double(o.dropout)}, {"seed", std::to_string(o.seed)}, {"json", o.json}};
  m.inputs = path_strings(clean.files);
  for (const auto& f : fake.files) m.inputs.push_back(f.string());
  m.inputs.push_back(o.dict);
  if (o.json != "-") m.outputs = {o.json};

  Json images = Json::array();
  double sum_clean = 0, sum_fake = 0, sum_polished = 0, sum_coss = 0, sum_ssim = 0, sum_ssim_clean = 0;
  double sum_psnr = 0;
  std::size_t finite_psnr = 0;
  for (std::size_t i = 0; i < fake.images.size(); ++i) {
    const Image& f = fake.images[i];
    const Image polished = polish(f, dict, cfg);
    const SimilarityReport sim = compare(polished, f);
    const double b_clean = spectrum(clean.images[i]).blob_energy_ratio;
    const double b_fake = spectrum(f).blob_energy_ratio;
    const double b_polished = spectrum(polished).blob_energy_ratio;
    const double s_clean = ssim(polished, clean.images[i]);
    sum_clean += b_clean;
    sum_fake += b_fake;
    sum_polished += b_polished;
    sum_coss += sim.coss;
    sum_ssim += sim.ssim;
    sum_ssim_clean += s_clean;
    if (!sim.psnr.identical) {
      sum_psnr += sim.psnr.db;
      ++finite_psnr;
    }
    Json entry = {{"file", fake.files[i].filename().string()},
                  {"blob_energy_ratio", {{"clean", b_clean}, {"fake", b_fake}, {"polished", b_polished}}}};
    entry["vs_fake"] = similarity_json(sim);
    entry["ssim_vs_clean"] = s_clean;
    images.push_back(std::move(entry));
  }

  const double n = static_cast<double>(fake.images.size());
  const double mean_fake = sum_fake / n;
  const double mean_polished = sum_polished / n;
  const double reduction = mean_polished > 0.0 ? mean_fake / mean_polished : std::numeric_limits<double>::infinity();
  Json means = {{"blob_energy_ratio_clean", sum_clean / n},
                {"blob_energy_ratio_fake", mean_fake},
                {"blob_energy_ratio_polished", mean_polished},
                {"blob_reduction_factor", std::isinf(reduction) ? Json("inf") : Json(reduction)},
                {"coss", sum_coss / n},
                {"psnr_db", finite_psnr ? Json(sum_psnr / static_cast<double>(finite_psnr)) : Json("inf")},
                {"ssim", sum_ssim / n},
                {"ssim_vs_clean", sum_ssim_clean / n}};

  Json checks = Json::array();
  if (pca) {
    checks.push_back(check("blob_polished_over_fake", mean_fake > 0 ? mean_polished / mean_fake : 0.0, "<=", 0.2));
    checks.push_back(check("mean_ssim", sum_ssim / n, ">=", 0.85));
    checks.push_back(check("mean_coss", sum_coss / n, ">=", 0.99));
  } else {
    checks.push_back(check("blob_reduction_factor", reduction, ">=", 2.0));
    checks.push_back(check("mean_ssim", sum_ssim / n, ">=", 0.9));
  }
  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();

  Json summary;
  summary["method"] = to_string(dict.kind());
  summary["images"] = fake.images.size();
  summary["means"] = means;
  summary["checks"] = checks;
  summary["all_pass"] = all;
  summary["per_image"] = images;
  summary["manifest"] = to_json(m);

  if (o.json == "-") {
    ctx.out << dump(summary);
  } else {
    write_file_atomic(o.json, dump(summary));
    ctx.out << "evaluate: " << fake.images.size() << " pairs, blob reduction " << means["blob_reduction_factor"].dump()
            << ", mean ssim " << sum_ssim / n << ", thresholds " << (all ? "met" : "not met") << '\n';
  }
  return 0;
}

} // namespace

Command add_evaluate(CLI::App& root, Context& ctx) {
  auto o = std::make_shared<EvaluateOptions>();
  auto* app = root.add_subcommand("evaluate", "Polish a paired fake corpus and score the result");
  app->add_option("--clean", o->clean, "Clean corpus directory")->required();
  app->add_option("--fake", o->fake, "Fake corpus directory (same file names)")->required();
  app->add_option("--dict", o->dict, "Dictionary file")->required();
  app->add_option("--tau", o->tau, "Reconstruction sparsity (K-SVD)")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--dropout", o->dropout, "Pixel dropout rate (K-SVD)")
    ->capture_default_str()->check(CLI::Range(0.0, 0.999999));
  app->add_option("--seed", o->seed, "Dropout seed")->capture_default_str();
  app->add_option("--json", o->json, "Summary path, or - for standard output")->required();
  return {app, [o, &ctx] { return run_evaluate(*o, ctx); }};
}

} // namespace fakepolisher::cli
