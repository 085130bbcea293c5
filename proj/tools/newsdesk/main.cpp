#include <iostream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "common.hpp"
#include "newsdesk/common/errors.hpp"

int main(int argc, char** argv) {
  using namespace newsdesk::cli;
  CLI::App app{"newsdesk: news aggregation, clustering and media profiling"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "newsdesk 0.1.0");
  std::string level = "info";
  app.add_option("--log-level", level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));
  app.parse_complete_callback([&] {
    spdlog::set_default_logger(spdlog::stderr_color_mt("newsdesk"));
    spdlog::set_level(spdlog::level::from_str(level));
  });

  register_serve(app);
  register_pipeline(app);
  register_cluster_eval(app);
  register_store(app);
  register_train(app);
  register_profiles(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const newsdesk::Error& e) {
    std::cerr << "newsdesk: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "newsdesk: unexpected error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
