#pragma once

#include <string>

#include "fakepolisher/metrics.hpp"
#include "fakepolisher/spectrum.hpp"
#include "fakepolisher_cli/manifest.hpp"

namespace fakepolisher::cli {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

/// PSNR as a number, or the string "inf" for identical images.
Json psnr_json(const Psnr& psnr);
Json similarity_json(const SimilarityReport& report);
/// {blob_energy_ratio, blob_sites, height, width}; the log magnitude itself is
/// exported as an image.
Json spectrum_json(const SpectrumReport& report);
/// "bin,count" rows with a header line.
std::string histogram_csv(const std::vector<long>& counts);

/// Pretty JSON text with a trailing newline.
std::string dump(const Json& json);

} // namespace fakepolisher::cli
