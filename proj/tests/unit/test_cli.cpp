#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "fakepolisher/dictionary_io.hpp"
#include "fakepolisher/errors.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher/image_io.hpp"
#include "fakepolisher_cli/cli.hpp"
#include "fakepolisher_cli/manifest.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fs = std::filesystem;
using namespace fakepolisher;
using namespace fakepolisher::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "fakepolisher_cli_test" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Json read_json(const fs::path& p) {
  const auto bytes = read_file(p);
  return Json::parse(bytes.begin(), bytes.end());
}

std::string s(const fs::path& p) { return p.string(); }

} // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"synth", "--size", "32"}).code == kUsageError);
  const auto dir = scratch("usage");
  const Run bad_period = invoke({"synth", "--n", "2", "--size", "32", "--artifact", "checkerboard",
                              "--period", "3", "--out", s(dir)});
  CHECK(bad_period.code == kUsageError);
  CHECK(bad_period.err.find("period") != std::string::npos);
  CHECK(invoke({"synth", "--n", "2", "--size", "30", "--artifact", "checkerboard", "--period", "4",
             "--out", s(dir)}).code == kUsageError);
  CHECK(invoke({"train", "--method", "pca", "--components", "0", "--in", s(dir), "--out", s(dir / "d.fpd")}).code ==
        kUsageError);
  CHECK(invoke({"train", "--method", "svd", "--in", s(dir), "--out", s(dir / "d.fpd")}).code == kUsageError);
  CHECK(invoke({"analyze", "--out", s(dir)}).code == kUsageError);
  CHECK(invoke({"--help"}).code == kSuccess);
}

TEST_CASE("synth writes a reproducible corpus and manifest") {
  const auto dir = scratch("synth");
  const Run r = invoke({"synth", "--n", "5", "--size", "32", "--seed", "7", "--out", s(dir / "a")});
  REQUIRE(r.code == 0);
  CHECK(fs::exists(dir / "a" / "img_0004.png"));
  CHECK(read_image(dir / "a" / "img_0000.png").height() == 32);
  REQUIRE(invoke({"synth", "--n", "5", "--size", "32", "--seed", "7", "--out", s(dir / "b")}).code == 0);
  for (int i = 0; i < 5; ++i) {
    const std::string name = "img_000" + std::to_string(i) + ".png";
    CHECK(read_file(dir / "a" / name) == read_file(dir / "b" / name));
  }
  const RunManifest m = read_manifest(dir / "a" / "manifest.json");
  CHECK(m.command == "synth");
  CHECK(m.seed == 7);
  CHECK(m.outputs.size() == 5);
  CHECK(m.details["images"].size() == 5);

  REQUIRE(invoke({"synth", "--n", "2", "--size", "32", "--seed", "7", "--start", "3", "--artifact", "checkerboard",
               "--out", s(dir / "fake")}).code == 0);
  const Json fm = read_json(dir / "fake" / "manifest.json");
  CHECK(fm["details"]["images"][0]["file"] == "img_0003.png");
  CHECK(fm["details"]["images"][0]["artifact"]["period"] == 4);
}

TEST_CASE("manifest round trip and rerun from a manifest") {
  const auto dir = scratch("manifest");
  REQUIRE(invoke({"synth", "--n", "3", "--size", "16", "--seed", "2", "--artifact", "unpooling", "--period", "2",
               "--out", s(dir / "x")}).code == 0);
  const RunManifest m = read_manifest(dir / "x" / "manifest.json");
  CHECK(manifest_from_json(to_json(m)) == m);
  const auto first = read_file(dir / "x" / "img_0001.png");
  fs::remove_all(dir / "x");
  REQUIRE(invoke(manifest_to_args(m)).code == 0);
  CHECK(read_file(dir / "x" / "img_0001.png") == first);
  CHECK(read_manifest(dir / "x" / "manifest.json") == m);
  CHECK_THROWS_AS(manifest_from_json(Json::object()), FormatError);
}

TEST_CASE("train, polish and evaluate with PCA") {
  const auto dir = scratch("pca");
  REQUIRE(invoke({"synth", "--n", "12", "--size", "16", "--seed", "3", "--out", s(dir / "train")}).code == 0);
  const Run t = invoke({"train", "--method", "pca", "--components", "11", "--in", s(dir / "train"), "--out",
                     s(dir / "d.fpd")});
  REQUIRE(t.code == 0);
  CHECK(t.out.find("relative error") != std::string::npos);
  const Dictionary dict = load_dictionary(dir / "d.fpd");
  CHECK(dict.size() == 11);
  CHECK(fs::exists(dir / "d.fpd.manifest.json"));

  // 12 images centre to rank 11, so training images come back losslessly
  REQUIRE(invoke({"polish", "--dict", s(dir / "d.fpd"), "--in", s(dir / "train" / "img_0002.png"), "--out",
               s(dir / "pol")}).code == 0);
  const Json report = read_json(dir / "pol" / "img_0002.report.json");
  const Json psnr = report["similarity"]["psnr_db"];
  CHECK((psnr == "inf" || psnr.get<double>() >= 60.0));

  // an all-black region leaves the files untouched
  write_image(dir / "black.png", Image(16, 16, 1));
  REQUIRE(invoke({"polish", "--dict", s(dir / "d.fpd"), "--in", s(dir / "train"), "--out", s(dir / "none"),
               "--region", s(dir / "black.png")}).code == 0);
  CHECK(read_file(dir / "none" / "img_0005.png") == read_file(dir / "train" / "img_0005.png"));

  REQUIRE(invoke({"synth", "--n", "3", "--size", "16", "--seed", "3", "--start", "20", "--out", s(dir / "clean")}).code == 0);
  REQUIRE(invoke({"synth", "--n", "3", "--size", "16", "--seed", "3", "--start", "20", "--artifact", "checkerboard",
               "--out", s(dir / "fake")}).code == 0);
  const Run e = invoke({"evaluate", "--clean", s(dir / "clean"), "--fake", s(dir / "fake"), "--dict",
                     s(dir / "d.fpd"), "--json", "-"});
  REQUIRE(e.code == 0);
  const Json summary = Json::parse(e.out);
  CHECK(summary["images"] == 3);
  CHECK(summary["checks"].size() == 3);
  CHECK(summary["means"].contains("blob_reduction_factor"));
  CHECK(summary["manifest"]["command"] == "evaluate");

  CHECK(invoke({"evaluate", "--clean", s(dir / "train"), "--fake", s(dir / "fake"), "--dict", s(dir / "d.fpd"),
             "--json", "-"}).code == kRuntimeError);
  CHECK(invoke({"evaluate", "--clean", s(dir / "clean"), "--fake", s(dir / "fake"), "--dict", s(dir / "missing.fpd"),
             "--json", "-"}).code == kRuntimeError);
  write_image(dir / "big.png", Image(20, 20, 1, 0.5));
  CHECK(invoke({"polish", "--dict", s(dir / "d.fpd"), "--in", s(dir / "big.png"), "--out", s(dir / "p2")}).code ==
        kRuntimeError);
}

TEST_CASE("train reports inconsistent corpora") {
  const auto dir = scratch("mixed");
  write_image(dir / "a.png", Image(8, 8, 1, 0.2));
  write_image(dir / "b.png", Image(8, 9, 1, 0.4));
  const Run r = invoke({"train", "--method", "pca", "--components", "1", "--in", s(dir), "--out", s(dir / "d.fpd")});
  CHECK(r.code == kRuntimeError);
  CHECK(r.err.find("b.png") != std::string::npos);
}

TEST_CASE("K-SVD training and polishing through the CLI") {
  const auto dir = scratch("ksvd");
  REQUIRE(invoke({"synth", "--n", "4", "--size", "16", "--seed", "5", "--out", s(dir / "train")}).code == 0);
  REQUIRE(invoke({"train", "--method", "ksvd", "--components", "20", "--patch", "4", "--stride", "4", "--sparsity",
               "3", "--iters", "2", "--in", s(dir / "train"), "--out", s(dir / "k.fpd")}).code == 0);
  const Json m = read_json(dir / "k.fpd.manifest.json");
  CHECK(m["details"]["rounds"].size() == 2);
  REQUIRE(invoke({"polish", "--dict", s(dir / "k.fpd"), "--in", s(dir / "train"), "--out", s(dir / "out"), "--tau",
               "4"}).code == 0);
  CHECK(fs::exists(dir / "out" / "img_0003.png"));
  CHECK(read_json(dir / "out" / "img_0003.report.json")["patches_coded"] == 16);
}

TEST_CASE("analyze single images, pairs and the toy") {
  const auto dir = scratch("analyze");
  REQUIRE(invoke({"synth", "--n", "1", "--size", "32", "--seed", "1", "--out", s(dir / "c")}).code == 0);
  REQUIRE(invoke({"synth", "--n", "1", "--size", "32", "--seed", "1", "--artifact", "checkerboard", "--out",
               s(dir / "f")}).code == 0);
  const auto clean = s(dir / "c" / "img_0000.png");
  const auto fake = s(dir / "f" / "img_0000.png");

  REQUIRE(invoke({"analyze", "--out", s(dir / "r1"), clean}).code == 0);
  CHECK(fs::exists(dir / "r1" / "img_0000.spectrum.png"));
  CHECK(fs::exists(dir / "r1" / "img_0000.hist.csv"));
  REQUIRE(invoke({"analyze", "--out", s(dir / "r2"), fake}).code == 0);
  CHECK(read_json(dir / "r2" / "img_0000.spectrum.json")["blob_energy_ratio"].get<double>() >
        read_json(dir / "r1" / "img_0000.spectrum.json")["blob_energy_ratio"].get<double>());

  REQUIRE(invoke({"analyze", "--pair", clean, clean, "--out", s(dir / "p")}).code == 0);
  const Json pair = read_json(dir / "p" / "pair.json");
  CHECK(pair["coss"].get<double>() == doctest::Approx(1.0));
  CHECK(pair["ssim"].get<double>() == doctest::Approx(1.0));
  CHECK(pair["psnr_db"] == "inf");

  write_image(dir / "small.png", Image(16, 16, 1, 0.5));
  CHECK(invoke({"analyze", "--pair", clean, s(dir / "small.png"), "--out", s(dir / "p")}).code == kRuntimeError);

  REQUIRE(invoke({"analyze", "--toy", "--out", s(dir / "toy")}).code == 0);
  const Json toy = read_json(dir / "toy" / "toy.json");
  CHECK(toy["checks"]["two_dominant_bins"] == true);
  CHECK(toy["checks"]["blurred_peaks_at_least_2"] == true);
  CHECK(fs::exists(dir / "toy" / "toy_blurred.hist.csv"));
}

TEST_CASE("report helpers") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(psnr_json({0.0, true}) == "inf");
  CHECK(histogram_csv({3, 0}) == "bin,count\n0,3\n1,0\n");
}
