#include "fakepolisher_cli/cli.hpp"

#include <algorithm>
#include <json.hpp>

#include "commands.hpp"
#include "fakepolisher/errors.hpp"

namespace fakepolisher::cli {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"FakePolisher: shallow reconstruction of upsampling artifacts", "fakepolisher"};
  app.set_version_flag("--version", std::string(version()));
  app.require_subcommand(1);

  const Command commands[] = {add_synth(app, ctx), add_train(app, ctx), add_polish(app, ctx),
                              add_analyze(app, ctx), add_evaluate(app, ctx)};

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    for (const auto& cmd : commands) {
      if (cmd.app->parsed()) return cmd.run();
    }
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kRuntimeError;
  }
}

} // namespace fakepolisher::cli
