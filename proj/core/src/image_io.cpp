#include "fakepolisher/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "fakepolisher/errors.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher/filters.hpp"

namespace fakepolisher {

namespace {

std::uint8_t to_byte(double v) {
  return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

std::string lower_extension(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

bool looks_like_png(const std::vector<std::uint8_t>& bytes) {
  return bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0;
}

} // namespace

std::vector<std::uint8_t> encode_png(const Image& image) {
  png_image desc{};
  desc.version = PNG_IMAGE_VERSION;
  desc.width = static_cast<png_uint_32>(image.width());
  desc.height = static_cast<png_uint_32>(image.height());
  desc.format = image.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;

  std::vector<std::uint8_t> raw(image.size());
  std::transform(image.values().begin(), image.values().end(), raw.begin(), to_byte);

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&desc, nullptr, &size, 0, raw.data(), 0, nullptr)) {
    throw IoError(std::string("png encode failed: ") + desc.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&desc, out.data(), &size, 0, raw.data(), 0, nullptr)) {
    throw IoError(std::string("png encode failed: ") + desc.message);
  }
  out.resize(size);
  return out;
}

Image decode_png(const std::vector<std::uint8_t>& bytes) {
  png_image desc{};
  desc.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&desc, bytes.data(), bytes.size())) {
    throw FormatError(std::string("png decode failed: ") + desc.message);
  }
  const bool color = (desc.format & PNG_FORMAT_FLAG_COLOR) != 0;
  desc.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  std::vector<std::uint8_t> raw(PNG_IMAGE_SIZE(desc));
  if (!png_image_finish_read(&desc, nullptr, raw.data(), 0, nullptr)) {
    png_image_free(&desc);
    throw FormatError(std::string("png decode failed: ") + desc.message);
  }
  std::vector<double> data(raw.size());
  std::transform(raw.begin(), raw.end(), data.begin(),
                 [](std::uint8_t b) { return static_cast<double>(b) / 255.0; });
  return Image(static_cast<int>(desc.height), static_cast<int>(desc.width), color ? 3 : 1,
               std::move(data));
}

std::vector<std::uint8_t> encode_pnm(const Image& image) {
  const std::string header = std::string(image.channels() == 3 ? "P6" : "P5") + "\n" +
                             std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + image.size());
  for (double v : image.values()) out.push_back(to_byte(v));
  return out;
}

Image decode_pnm(const std::vector<std::uint8_t>& bytes) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
  };
  auto read_int = [&] {
    skip_space();
    long value = 0;
    std::size_t digits = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      value = value * 10 + (bytes[pos++] - '0');
      if (++digits > 9) throw FormatError("pnm header value too large");
    }
    if (digits == 0) throw FormatError("malformed pnm header");
    return static_cast<int>(value);
  };

  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
    throw FormatError("only binary PGM (P5) and PPM (P6) are supported");
  }
  const int channels = bytes[1] == '6' ? 3 : 1;
  pos = 2;
  const int width = read_int();
  const int height = read_int();
  const int maxval = read_int();
  if (maxval != 255) throw FormatError("only 8-bit pnm (maxval 255) is supported");
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) throw FormatError("malformed pnm header");
  ++pos;

  const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height) *
                     static_cast<std::size_t>(channels);
  if (width < 1 || height < 1 || bytes.size() - pos < count) {
    throw FormatError("truncated pnm data");
  }
  std::vector<double> data(count);
  for (std::size_t i = 0; i < count; ++i) data[i] = static_cast<double>(bytes[pos + i]) / 255.0;
  return Image(height, width, channels, std::move(data));
}

Image read_image(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    if (looks_like_png(bytes)) return decode_png(bytes);
    return decode_pnm(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_image(const std::filesystem::path& path, const Image& image) {
  const auto ext = lower_extension(path);
  if (ext == ".png") {
    write_file_atomic(path, encode_png(image));
  } else if (ext == ".pgm" || ext == ".ppm" || ext == ".pnm") {
    write_file_atomic(path, encode_pnm(image));
  } else {
    throw ParameterError("unsupported image extension '" + ext + "' for " + path.string());
  }
}

PixelMask mask_from_image(const Image& image) {
  const Image gray = to_grayscale(image);
  PixelMask mask = PixelMask::none_kept(image.height(), image.width());
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) mask.set(r, c, gray.at(r, c) > 0.0);
  }
  return mask;
}

} // namespace fakepolisher
