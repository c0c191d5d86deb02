#include <algorithm>
#include <filesystem>
#include <numeric>

#include "commands.hpp"
#include "corpus.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher/filters.hpp"
#include "fakepolisher/image_io.hpp"
#include "fakepolisher/metrics.hpp"
#include "fakepolisher/spectrum.hpp"
#include "fakepolisher/toy.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fakepolisher::cli {

namespace {

struct AnalyzeOptions {
  std::vector<std::string> images;
  std::vector<std::string> pair;
  bool toy = false;
  std::string out;
  int bins = 256;
};

// Writes <stem>.spectrum.json, <stem>.spectrum.png and <stem>.hist.csv.
Json write_analysis(const std::filesystem::path& dir, const std::string& stem, const Image& image,
                    int bins, RunManifest& m) {
  const SpectrumReport report = spectrum(image);
  const auto counts = histogram(image, bins);
  Json j = spectrum_json(report);
  j["histogram_peaks"] = histogram_peaks(counts);

  const auto json_path = dir / (stem + ".spectrum.json");
  const auto png_path = dir / (stem + ".spectrum.png");
  const auto csv_path = dir / (stem + ".hist.csv");
  write_file_atomic(json_path, dump(j));
  write_image(png_path, spectrum_image(report));
  write_file_atomic(csv_path, histogram_csv(counts));
  for (const auto& p : {json_path, png_path, csv_path}) m.outputs.push_back(p.string());
  return j;
}

int gray_bin(double v, int bins) { return std::min(bins - 1, static_cast<int>(v * bins)); }

Json run_toy(const std::filesystem::path& dir, RunManifest& m, Context& ctx) {
  const ToyExample toy = build_toy_example();
  write_image(dir / "toy.png", toy.toy);
  write_image(dir / "toy_blurred.png", toy.blurred);
  m.outputs.push_back((dir / "toy.png").string());
  m.outputs.push_back((dir / "toy_blurred.png").string());
  write_analysis(dir, "toy", toy.toy, kToyHistogramBins, m);
  write_analysis(dir, "toy_blurred", toy.blurred, kToyHistogramBins, m);

  // the two largest bins of the toy histogram
  std::vector<int> order(toy.hist_toy.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return toy.hist_toy[static_cast<std::size_t>(a)] > toy.hist_toy[static_cast<std::size_t>(b)];
  });
  std::vector<int> dominant = {std::min(order[0], order[1]), std::max(order[0], order[1])};
  const long total = std::accumulate(toy.hist_toy.begin(), toy.hist_toy.end(), 0L);
  const long top_two = toy.hist_toy[static_cast<std::size_t>(order[0])] + toy.hist_toy[static_cast<std::size_t>(order[1])];
  const auto nonzero = std::count_if(toy.hist_toy.begin(), toy.hist_toy.end(), [](long c) { return c > 0; });

  // bins of the two source tones, read off adjacent cells
  const Image gray = to_grayscale(toy.toy);
  const int bin_a = gray_bin(gray.at(0, 0), kToyHistogramBins);
  const int bin_b = gray_bin(gray.at(0, toy.toy.width() / 8), kToyHistogramBins);
  const std::vector<int> expected = {std::min(bin_a, bin_b), std::max(bin_a, bin_b)};
  const auto peaks = histogram_peaks(toy.hist_blurred);
  const double ratio_toy = toy.report_toy.blob_energy_ratio;
  const double ratio_blurred = toy.report_blurred.blob_energy_ratio;

  Json j;
  j["height"] = toy.toy.height();
  j["width"] = toy.toy.width();
  j["bins"] = kToyHistogramBins;
  j["toy"] = {{"nonzero_bins", nonzero},
              {"dominant_bins", dominant},
              {"dominant_mass", static_cast<double>(top_two) / static_cast<double>(total)},
              {"expected_bins", expected},
              {"blob_energy_ratio", ratio_toy}};
  j["blurred"] = {{"histogram_peaks", peaks}, {"blob_energy_ratio", ratio_blurred}};
  j["checks"] = {
    {"two_dominant_bins", nonzero == 2 && dominant == expected},
    {"blurred_peaks_at_least_2", peaks.size() >= 2},
    {"blob_ratio_retained", ratio_blurred >= 0.3 * ratio_toy}};
  const auto path = dir / "toy.json";
  write_file_atomic(path, dump(j));
  m.outputs.push_back(path.string());
  ctx.out << "toy: dominant bins " << dominant[0] << "," << dominant[1] << "; blurred peaks "
          << peaks.size() << "; blob ratio " << ratio_toy << " -> " << ratio_blurred << '\n';
  return j;
}

int run_analyze(const AnalyzeOptions& o, Context& ctx) {
  if (o.images.empty() && o.pair.empty() && !o.toy) {
    throw UsageError("analyze needs images, --pair or --toy");
  }
  namespace fs = std::filesystem;
  const fs::path dir = o.out;
  fs::create_directories(dir);

  RunManifest m = new_manifest("analyze", 0);
  m.parameters = {{"out", o.out}, {"bins", std::to_string(o.bins)}, {"toy", o.toy ? "true" : "false"}};
  m.arguments = o.images;
  Json details = Json::object();

  for (const auto& name : o.images) {
    const fs::path file = name;
    m.inputs.push_back(name);
    const Json j = write_analysis(dir, file.stem().string(), read_image(file), o.bins, m);
    ctx.out << file.filename().string() << ": blob_energy_ratio " << j["blob_energy_ratio"].get<double>() << '\n';
  }

  if (!o.pair.empty()) {
    m.parameters["pair"] = o.pair[0] + "\n" + o.pair[1];
    m.inputs.push_back(o.pair[0]);
    m.inputs.push_back(o.pair[1]);
    const Image a = read_image(o.pair[0]);
    const Image b = read_image(o.pair[1]);
    if (!a.same_shape(b)) {
      throw DimensionError("pair images differ in size: " + o.pair[0] + " vs " + o.pair[1]);
    }
    Json j = similarity_json(compare(a, b));
    j["a"] = {{"path", o.pair[0]}, {"blob_energy_ratio", spectrum(a).blob_energy_ratio}};
    j["b"] = {{"path", o.pair[1]}, {"blob_energy_ratio", spectrum(b).blob_energy_ratio}};
    const auto path = dir / "pair.json";
    write_file_atomic(path, dump(j));
    m.outputs.push_back(path.string());
    ctx.out << "pair: coss " << j["coss"].dump() << " psnr " << j["psnr_db"].dump() << " ssim "
            << j["ssim"].dump() << '\n';
  }

  if (o.toy) details["toy"] = run_toy(dir, m, ctx)["checks"];
  m.details = details;
  write_manifest(dir / "manifest.json", m);
  return 0;
}

} // namespace

Command add_analyze(CLI::App& root, Context& ctx) {
  auto o = std::make_shared<AnalyzeOptions>();
  auto* app = root.add_subcommand("analyze", "Spectrum, histogram and similarity reports");
  app->add_option("images", o->images, "Images to analyze");
  app->add_option("--pair", o->pair, "Two images to compare")->expected(2)->allow_extra_args(false);
  app->add_flag("--toy", o->toy, "Run the checkerboard toy example");
  app->add_option("--out", o->out, "Report directory")->required();
  app->add_option("--bins", o->bins, "Histogram bins")->capture_default_str()->check(CLI::Range(2, 65536));
  return {app, [o, &ctx] { return run_analyze(*o, ctx); }};
}

} // namespace fakepolisher::cli
