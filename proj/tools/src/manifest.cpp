#include "fakepolisher_cli/manifest.hpp"

#include "fakepolisher/errors.hpp"
#include "fakepolisher/file_io.hpp"
#include "fakepolisher_cli/reports.hpp"

namespace fakepolisher::cli {

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["tool_version"] = m.tool_version;
  j["seed"] = m.seed;
  j["parameters"] = Json::object();
  for (const auto& [k, v] : m.parameters) j["parameters"][k] = v;
  j["arguments"] = m.arguments;
  j["inputs"] = m.inputs;
  j["outputs"] = m.outputs;
  j["details"] = m.details;
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  try {
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("parameters").items()) m.parameters[k] = v.get<std::string>();
    m.arguments = j.at("arguments").get<std::vector<std::string>>();
    m.inputs = j.at("inputs").get<std::vector<std::string>>();
    m.outputs = j.at("outputs").get<std::vector<std::string>>();
    m.details = j.at("details");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed run manifest: ") + e.what());
  }
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  write_file_atomic(path, dump(to_json(manifest)));
}

RunManifest read_manifest(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return manifest_from_json(Json::parse(bytes.begin(), bytes.end()));
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::string> manifest_to_args(const RunManifest& m) {
  std::vector<std::string> args{m.command};
  for (const auto& [k, v] : m.parameters) {
    if (v == "false") continue;
    args.push_back("--" + k);
    if (v == "true") continue;
    // --pair keeps its two paths newline-joined
    std::size_t start = 0;
    if (k == "pair") {
      for (std::size_t pos; (pos = v.find('\n', start)) != std::string::npos; start = pos + 1) {
        args.push_back(v.substr(start, pos - start));
      }
      args.push_back(v.substr(start));
    } else {
      args.push_back(v);
    }
  }
  args.insert(args.end(), m.arguments.begin(), m.arguments.end());
  return args;
}

} // namespace fakepolisher::cli
