// Batch front end: parse a scene file, run one command, print the report.
//
// Exit codes: 0 success (and "equal" for compare), 1 validation or usage
// error, 2 compare verdict "not-proven".

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "eqlef/report.hpp"

#ifndef EQLEF_DEFAULT_FIXTURE_DIR
#define EQLEF_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fixture_dir() {
  if (const char* env = std::getenv("EQLEF_FIXTURE_DIR")) return env;
  return EQLEF_DEFAULT_FIXTURE_DIR;
}

std::string basename_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = base.rfind(".scene");
  if (dot != std::string::npos && dot == base.size() - 6) base.erase(dot);
  return base;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant Lefschetz invariants of coloured simplicial complexes"};
  app.require_subcommand(1);

  std::string scene_path;
  std::string fixture;
  std::string policy;
  bool json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("scene", scene_path, "scene file path");
    cmd->add_option("--fixture", fixture, "bundled fixture name");
    cmd->add_option("--policy", policy, "subgroup policy: all | cyclic+stab")
        ->check(CLI::IsMember({"all", "cyclic+stab"}));
    cmd->add_flag("--json", json, "append a machine-readable [json] block");
  };

  add_common(app.add_subcommand("euler", "equivariant Euler characteristic"));
  add_common(app.add_subcommand("lef-comb", "combinatorial Lefschetz class"));
  add_common(app.add_subcommand("lef-smooth", "smooth-data Lefschetz class"));
  add_common(app.add_subcommand("compare", "decide equality of both classes mod relations"));
  add_common(app.add_subcommand("oracle", "homology supertrace vs chain supertrace"));

  CLI11_PARSE(app, argc, argv);
  std::string command = app.get_subcommands().front()->get_name();

  try {
    if (scene_path.empty() && fixture.empty())
      throw eqlef::Error("no scene given: pass a path or --fixture=<name>");
    if (!scene_path.empty() && !fixture.empty())
      throw eqlef::Error("pass either a scene path or --fixture, not both");
    std::string path = scene_path.empty() ? fixture_dir() + "/" + fixture + ".scene"
                                          : scene_path;

    std::ifstream in(path);
    if (!in) throw eqlef::Error("cannot open scene file '" + path + "'");

    auto started = std::chrono::steady_clock::now();
    eqlef::Scene scene = eqlef::parse_scene(in, basename_of(path));

    eqlef::ReportOptions options;
    options.json = json;
    if (policy == "all") options.policy_override = eqlef::SubgroupPolicy::all;
    if (policy == "cyclic+stab")
      options.policy_override = eqlef::SubgroupPolicy::cyclic_plus_stabilizers;

    auto result = eqlef::run_command(command, scene, options);
    std::cout << result.text;

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return result.exit_code;
  } catch (const eqlef::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
