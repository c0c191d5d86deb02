#include "fakepolisher/dictionary_io.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <string>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/file_io.hpp"

namespace fakepolisher {

namespace {

static_assert(std::endian::native == std::endian::little,
              "dictionary serialization assumes a little-endian host");

constexpr char kMagic[8] = {'F', 'P', 'D', 'I', 'C', 'T', '0', '1'};
constexpr std::size_t kHeaderSize = 8 + 1 + 4 + 4 + (2 + 2 + 4 + 4 + 1) + (8 + 2 + 2 + 8);

class Writer {
public:
  template <typename T> void put(T value) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(&value);
    bytes_.insert(bytes_.end(), p, p + sizeof(T));
  }
  void put_doubles(const double* data, std::size_t count) {
    const auto* p = reinterpret_cast<const std::uint8_t*>(data);
    bytes_.insert(bytes_.end(), p, p + count * sizeof(double));
  }
  std::vector<std::uint8_t>& bytes() { return bytes_; }

private:
  std::vector<std::uint8_t> bytes_;
};

class Reader {
public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_{bytes} {}
  template <typename T> T get() {
    need(sizeof(T));
    T value;
    std::memcpy(&value, bytes_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return value;
  }
  void get_doubles(double* out, std::size_t count) {
    need(count * sizeof(double));
    std::memcpy(out, bytes_.data() + pos_, count * sizeof(double));
    pos_ += count * sizeof(double);
  }

private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw FormatError("dictionary file is truncated");
  }
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::uint32_t checksum(const std::uint8_t* data, std::size_t size) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // crc32 takes uInt lengths; feed large buffers in chunks.
  while (size > 0) {
    const auto chunk = static_cast<uInt>(std::min<std::size_t>(size, 1u << 30));
    crc = crc32(crc, data, chunk);
    data += chunk;
    size -= chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

} // namespace

std::vector<std::uint8_t> serialize_dictionary(const Dictionary& dict) {
  Writer w;
  for (char c : kMagic) w.put(static_cast<std::uint8_t>(c));
  w.put(static_cast<std::uint8_t>(dict.kind()));
  w.put(static_cast<std::uint32_t>(dict.dim()));
  w.put(static_cast<std::uint32_t>(dict.size()));
  const auto& g = dict.geometry();
  w.put(g.patch_size);
  w.put(g.stride);
  w.put(g.height);
  w.put(g.width);
  w.put(g.channels);
  const auto& meta = dict.meta();
  w.put(meta.n_train);
  w.put(meta.sparsity_k);
  w.put(meta.iterations);
  w.put(meta.seed);
  w.put_doubles(dict.mean().data(), static_cast<std::size_t>(dict.mean().size()));
  w.put_doubles(dict.atoms().data(), static_cast<std::size_t>(dict.atoms().size()));
  auto& bytes = w.bytes();
  w.put(checksum(bytes.data(), bytes.size()));
  return std::move(bytes);
}

Dictionary deserialize_dictionary(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < sizeof(kMagic) || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("bad magic: not an FPDICT01 dictionary file");
  }
  if (bytes.size() < kHeaderSize + 4) throw FormatError("dictionary file is truncated");

  Reader r(bytes.subspan(sizeof(kMagic)));
  const auto kind = r.get<std::uint8_t>();
  if (kind > 1) throw FormatError("unknown dictionary kind " + std::to_string(kind));
  const auto d = r.get<std::uint32_t>();
  const auto m = r.get<std::uint32_t>();
  DictionaryGeometry g;
  g.patch_size = r.get<std::uint16_t>();
  g.stride = r.get<std::uint16_t>();
  g.height = r.get<std::uint32_t>();
  g.width = r.get<std::uint32_t>();
  g.channels = r.get<std::uint8_t>();
  TrainMeta meta;
  meta.n_train = r.get<std::uint64_t>();
  meta.sparsity_k = r.get<std::uint16_t>();
  meta.iterations = r.get<std::uint16_t>();
  meta.seed = r.get<std::uint64_t>();

  const std::uint64_t values = static_cast<std::uint64_t>(d) * (1 + static_cast<std::uint64_t>(m));
  const std::uint64_t expected = kHeaderSize + values * sizeof(double) + 4;
  if (bytes.size() < expected) throw FormatError("dictionary file is truncated");
  if (bytes.size() > expected) throw FormatError("dictionary file has trailing bytes");

  const std::size_t body = bytes.size() - 4;
  std::uint32_t stored = 0;
  std::memcpy(&stored, bytes.data() + body, 4);
  if (checksum(bytes.data(), body) != stored) {
    throw FormatError("dictionary checksum mismatch (CRC32)");
  }

  Eigen::VectorXd mean(d);
  Eigen::MatrixXd atoms(d, m);
  r.get_doubles(mean.data(), d);
  r.get_doubles(atoms.data(), static_cast<std::size_t>(d) * m);
  try {
    return Dictionary(static_cast<DictionaryKind>(kind), std::move(atoms), std::move(mean), g,
                      meta);
  } catch (const Error& e) {
    throw FormatError(std::string("inconsistent dictionary content: ") + e.what());
  }
}

void save_dictionary(const Dictionary& dict, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_dictionary(dict));
}

Dictionary load_dictionary(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return deserialize_dictionary(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

} // namespace fakepolisher
