#pragma once

#include <CLI11.hpp>

#include <functional>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fakepolisher/fakepolisher.hpp"
#include "fakepolisher_cli/manifest.hpp"

namespace fakepolisher::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
};

/// Flag combinations CLI11 cannot check on its own; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Command {
  CLI::App* app = nullptr;
  std::function<int()> run;
};

Command add_synth(CLI::App& root, Context& ctx);
Command add_train(CLI::App& root, Context& ctx);
Command add_polish(CLI::App& root, Context& ctx);
Command add_analyze(CLI::App& root, Context& ctx);
Command add_evaluate(CLI::App& root, Context& ctx);

inline RunManifest new_manifest(std::string command, std::uint64_t seed) {
  RunManifest m;
  m.command = std::move(command);
  m.tool_version = version();
  m.seed = seed;
  return m;
}

} // namespace fakepolisher::cli
