#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dlt/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dlt::InvalidInputError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-Laplace transforms of exponential sums and their"
               " boundary-value inversion"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_given = false;

  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "print poles, residues, reality flag and admissible sector"},
      {"transform", "CSV of the double-Laplace transform over the grid"},
      {"invert", "CSV of the recovered signal against the true signal"},
      {"verify", "run the identity suites on the configured model"},
      {"sweep", "run the identity suites over a seeded model ensemble"}};
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", config_path, "path to the run configuration")
        ->required();
    sub->add_option("--out", out_path, "output file (default: stdout)");
    sub->add_option("--seed", seed, "override the configured seed")
        ->each([&](const std::string&) { seed_given = true; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    dlt::RunConfig cfg = dlt::parse_config(read_file(config_path));
    cfg.command = dlt::parse_command_name(app.get_subcommands().front()->get_name());
    if (!out_path.empty()) cfg.out_path = out_path;
    if (seed_given) cfg.seed = seed;
    return dlt::run_command(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
