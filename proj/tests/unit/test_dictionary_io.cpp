#include <doctest.h>

#include <filesystem>

#include "fakepolisher/dictionary_io.hpp"
#include "fakepolisher/dictlearn.hpp"
#include "fakepolisher/errors.hpp"
#include "fakepolisher/file_io.hpp"
#include "support/oracles.hpp"

using namespace fakepolisher;

namespace {

Dictionary sample_ksvd() {
  fakepolisher::Rng rng(21);
  const Eigen::MatrixXd y = oracle::random_matrix(16, 40, rng);
  TrainConfig cfg;
  cfg.components = 24;
  cfg.sparsity = 3;
  cfg.iterations = 2;
  cfg.seed = 77;
  return train_ksvd(y, cfg, DictionaryGeometry::patches(4, 2, 1));
}

} // namespace

TEST_CASE("serialized layout has the documented size and header") {
  const Dictionary dict = sample_ksvd();
  const auto bytes = serialize_dictionary(dict);
  CHECK(bytes.size() == 8 + 1 + 4 + 4 + 13 + 20 + 16 * 8 + 16 * 24 * 8 + 4);
  CHECK(std::string(bytes.begin(), bytes.begin() + 8) == "FPDICT01");
  CHECK(bytes[8] == 1);
}

TEST_CASE("save and load reproduce the dictionary bit for bit") {
  const auto dir = std::filesystem::temp_directory_path() / "fakepolisher_dict_test";
  std::filesystem::create_directories(dir);
  const Dictionary ksvd = sample_ksvd();
  save_dictionary(ksvd, dir / "k.fpd");
  CHECK(load_dictionary(dir / "k.fpd") == ksvd);

  fakepolisher::Rng rng(3);
  const Dictionary pca = train_pca(oracle::random_matrix(12, 30, rng), 7,
                                   DictionaryGeometry::global(2, 2, 3));
  save_dictionary(pca, dir / "p.fpd");
  const Dictionary back = load_dictionary(dir / "p.fpd");
  CHECK(back == pca);
  CHECK(back.geometry().is_global());
  CHECK(back.geometry().height == 2);
}

TEST_CASE("truncated files are rejected") {
  const auto bytes = serialize_dictionary(sample_ksvd());
  for (std::size_t cut : {std::size_t{0}, std::size_t{5}, std::size_t{30}, bytes.size() - 1}) {
    CHECK_THROWS_AS(deserialize_dictionary(std::span(bytes.data(), cut)), FormatError);
  }
}

TEST_CASE("a flipped checksum byte is reported as a checksum failure") {
  auto bytes = serialize_dictionary(sample_ksvd());
  bytes.back() ^= 0x5a;
  try {
    deserialize_dictionary(bytes);
    FAIL("expected a format error");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("checksum") != std::string::npos);
  }
}

TEST_CASE("corrupted payload and magic are rejected") {
  auto bytes = serialize_dictionary(sample_ksvd());
  auto payload = bytes;
  payload[100] ^= 0x01;
  CHECK_THROWS_AS(deserialize_dictionary(payload), FormatError);
  auto magic = bytes;
  magic[0] = 'X';
  CHECK_THROWS_AS(deserialize_dictionary(magic), FormatError);
  auto extra = bytes;
  extra.push_back(0);
  CHECK_THROWS_AS(deserialize_dictionary(extra), FormatError);
}
