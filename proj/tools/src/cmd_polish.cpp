#include <filesystem>

#include "commands.hpp"
#include "corpus.hpp"
#include "fakepolisher/dictionary_io.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher/image_io.hpp"
#include "fakepolisher/metrics.hpp"
#include "fakepolisher/polish.hpp"
#include "fakepolisher/spectrum.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fakepolisher::cli {

namespace {

struct PolishOptions {
  std::string dict;
  std::string in;
  std::string out;
  int tau = 20;
  double dropout = 0.1;
  std::uint64_t seed = 0;
  std::string region;
};

int run_polish(const PolishOptions& o, Context& ctx) {
  namespace fs = std::filesystem;
  const Dictionary dict = load_dictionary(o.dict);
  const auto files = list_images(o.in);

  PolishConfig cfg = dict.kind() == DictionaryKind::Pca ? PolishConfig::pca() : PolishConfig::ksvd();
  cfg.sparsity = o.tau;
  if (dict.kind() == DictionaryKind::Ksvd) cfg.dropout_rate = o.dropout;
  cfg.seed = o.seed;
  if (!o.region.empty()) cfg.region = mask_from_image(read_image(o.region));

  const fs::path dir = o.out;
  fs::create_directories(dir);

  RunManifest m = new_manifest("polish", o.seed);
  m.parameters = {{"dict", o.dict}, {"in", o.in}, {"out", o.out}, {"tau", std::to_string(o.tau)},
                  {"dropout", format_double(o.dropout)}, {"seed", std::to_string(o.seed)}};
  if (!o.region.empty()) m.parameters["region"] = o.region;
  m.inputs = path_strings(files);
  m.inputs.push_back(o.dict);
  if (!o.region.empty()) m.inputs.push_back(o.region);
  m.details = {{"method", to_string(dict.kind())}, {"images", Json::array()}};

  for (const auto& file : files) {
    const auto original = read_file(file);
    const Image input = read_image(file);
    PolishStats stats;
    const Image output = polish(input, dict, cfg, &stats);
    const fs::path target = dir / file.filename();
    if (output == input) {
      // unchanged images are passed through verbatim
      write_file_atomic(target, original);
    } else {
      write_image(target, output);
    }
    if (stats.fully_dropped_patches > 0) {
      ctx.err << "warning: " << file.filename().string() << ": " << stats.fully_dropped_patches
              << " patches had every pixel dropped and were coded unmasked\n";
    }
    if (stats.empty_region) ctx.err << "warning: empty region, " << file.filename().string() << " left unchanged\n";

    Json report;
    report["input"] = file.string();
    report["output"] = target.string();
    report["similarity"] = similarity_json(compare(output, input));
    report["blob_energy_ratio_input"] = spectrum(input).blob_energy_ratio;
    report["blob_energy_ratio_output"] = spectrum(output).blob_energy_ratio;
    report["patches_coded"] = stats.patches_coded;
    report["fully_dropped_patches"] = stats.fully_dropped_patches;
    const fs::path report_path = dir / (file.stem().string() + ".report.json");
    write_file_atomic(report_path, dump(report));

    m.outputs.push_back(target.string());
    m.outputs.push_back(report_path.string());
    m.details["images"].push_back(file.filename().string());
  }
  write_manifest(dir / "manifest.json", m);
  ctx.out << "polish: " << files.size() << " images with a " << to_string(dict.kind())
          << " dictionary into " << dir.string() << '\n';
  return 0;
}

} // namespace

Command add_polish(CLI::App& root, Context& ctx) {
  auto o = std::make_shared<PolishOptions>();
  auto* app = root.add_subcommand("polish", "Reconstruct images through a learned dictionary");
  app->add_option("--dict", o->dict, "Dictionary file")->required();
  app->add_option("--in", o->in, "Image file or directory")->required();
  app->add_option("--out", o->out, "Output directory")->required();
  app->add_option("--tau", o->tau, "Reconstruction sparsity (K-SVD)")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--dropout", o->dropout, "Pixel dropout rate (K-SVD)")
    ->capture_default_str()->check(CLI::Range(0.0, 0.999999));
  app->add_option("--seed", o->seed, "Dropout seed")->capture_default_str();
  app->add_option("--region", o->region, "Mask image; nonzero pixels are polished");
  return {app, [o, &ctx] { return run_polish(*o, ctx); }};
}

} // namespace fakepolisher::cli
