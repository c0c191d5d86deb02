#include <cstdio>
#include <filesystem>

#include "commands.hpp"
#include "fakepolisher/image_io.hpp"
#include "fakepolisher/synth.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fakepolisher::cli {

namespace {

struct SynthOptions {
  int n = 0;
  int size = 32;
  int channels = 1;
  std::uint64_t seed = 0;
  int start = 0;
  std::string out;
  std::string artifact;
  int period = 4;
  double strength = 0.3;
};

std::string image_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "img_%04d.png", index);
  return buf;
}

int run_synth(const SynthOptions& o, Context& ctx) {
  std::optional<ArtifactKind> artifact;
  if (!o.artifact.empty()) {
    try {
      artifact = ArtifactKind{parse_artifact_type(o.artifact), o.strength, o.period};
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    if (o.period != 2 && o.period != 4 && o.period != 8) {
      throw UsageError("--period must be 2, 4 or 8");
    }
    if (o.size % o.period != 0) {
      throw UsageError("--period " + std::to_string(o.period) + " must divide --size " +
                       std::to_string(o.size));
    }
  }

  namespace fs = std::filesystem;
  const fs::path dir = o.out;
  fs::create_directories(dir);

  RunManifest m = new_manifest("synth", o.seed);
  m.parameters = {{"n", std::to_string(o.n)},          {"size", std::to_string(o.size)},
                  {"channels", std::to_string(o.channels)}, {"seed", std::to_string(o.seed)},
                  {"start", std::to_string(o.start)},  {"out", o.out}};
  if (artifact) {
    m.parameters["artifact"] = o.artifact;
    m.parameters["period"] = std::to_string(o.period);
    m.parameters["strength"] = format_double(o.strength);
  }
  m.details = {{"seed", o.seed}, {"n", o.n}, {"size", o.size}, {"channels", o.channels},
               {"first_index", o.start}, {"images", Json::array()}};

  const auto corpus = generate_clean_corpus(o.n, o.size, o.channels, o.seed, o.start);
  for (int i = 0; i < o.n; ++i) {
    const int index = o.start + i;
    const Image& clean = corpus[static_cast<std::size_t>(i)];
    const fs::path file = dir / image_name(index);
    Json entry = {{"file", file.filename().string()}, {"index", index}, {"artifact", nullptr}};
    if (artifact) {
      write_image(file, inject_artifact(clean, *artifact, derive_seed(o.seed, static_cast<std::uint64_t>(index))));
      entry["artifact"] = {{"type", to_string(artifact->type)},
                           {"strength", artifact->strength},
                           {"period", artifact->period}};
    } else {
      write_image(file, clean);
    }
    m.outputs.push_back(file.string());
    m.details["images"].push_back(std::move(entry));
  }
  const fs::path manifest = dir / "manifest.json";
  write_manifest(manifest, m);
  ctx.out << "synth: wrote " << o.n << (artifact ? " fake" : " clean") << " images to "
          << dir.string() << '\n';
  return 0;
}

} // namespace

Command add_synth(CLI::App& root, Context& ctx) {
  auto o = std::make_shared<SynthOptions>();
  auto* app = root.add_subcommand("synth", "Generate a clean corpus, optionally with an injected artifact");
  app->add_option("--n", o->n, "Number of images")->required()->check(CLI::PositiveNumber);
  app->add_option("--size", o->size, "Image side in pixels")->capture_default_str()->check(CLI::PositiveNumber);
  app->add_option("--channels", o->channels, "1 (gray) or 3 (RGB)")->capture_default_str()->check(CLI::IsMember({1, 3}));
  app->add_option("--seed", o->seed, "Corpus seed")->capture_default_str();
  app->add_option("--start", o->start, "Global index of the first image")->capture_default_str()->check(CLI::NonNegativeNumber);
  app->add_option("--out", o->out, "Output directory")->required();
  app->add_option("--artifact", o->artifact, "checkerboard, unpooling or interpolation");
  app->add_option("--period", o->period, "Artifact period (2, 4 or 8)")->capture_default_str();
  app->add_option("--strength", o->strength, "Artifact strength in [0, 1]")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  return {app, [o, &ctx] { return run_synth(*o, ctx); }};
}

} // namespace fakepolisher::cli
