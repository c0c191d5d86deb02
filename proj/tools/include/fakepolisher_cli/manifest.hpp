#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace fakepolisher::cli {

using Json = nlohmann::ordered_json;

/// Record of one CLI run. `parameters` holds every option with its effective
/// value and `arguments` the positional arguments, so manifest_to_args()
/// rebuilds an equivalent command line.
struct RunManifest {
  std::string command;
  std::string tool_version;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> parameters;
  std::vector<std::string> arguments;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  Json details = Json::object();

  friend bool operator==(const RunManifest&, const RunManifest&) = default;
};

Json to_json(const RunManifest& manifest);
/// Throws fakepolisher::FormatError on missing or mistyped fields.
RunManifest manifest_from_json(const Json& json);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest read_manifest(const std::filesystem::path& path);

/// Flag-only options are recorded as "true"/"false"; "false" flags are left out.
std::vector<std::string> manifest_to_args(const RunManifest& manifest);

} // namespace fakepolisher::cli
