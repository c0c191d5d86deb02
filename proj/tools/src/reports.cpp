#include "fakepolisher_cli/reports.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace fakepolisher::cli {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return {buf, res.ptr};
}

Json psnr_json(const Psnr& psnr) {
  if (psnr.identical) return "inf";
  return psnr.db;
}

Json similarity_json(const SimilarityReport& report) {
  Json j;
  j["coss"] = report.coss;
  j["psnr_db"] = psnr_json(report.psnr);
  j["ssim"] = report.ssim;
  return j;
}

Json spectrum_json(const SpectrumReport& report) {
  Json j;
  j["height"] = report.log_magnitude.rows();
  j["width"] = report.log_magnitude.cols();
  j["blob_energy_ratio"] = report.blob_energy_ratio;
  j["blob_sites"] = Json::array();
  for (const auto& [r, c] : report.blob_sites) j["blob_sites"].push_back({r, c});
  return j;
}

std::string histogram_csv(const std::vector<long>& counts) {
  std::ostringstream out;
  out << "bin,count\n";
  for (std::size_t b = 0; b < counts.size(); ++b) out << b << ',' << counts[b] << '\n';
  return out.str();
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

} // namespace fakepolisher::cli
