#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "zigzag/errors.hpp"
#include "zigzag_app/commands.hpp"
#include "zigzag_app/config.hpp"

using namespace zigzag::app;

int main(int argc, char** argv) {
  CLI::App cli{"Zigzag cavity model: modes, sweeps, noise budget, sensing range, validation"};
  cli.require_subcommand(0, 1);
  cli.fallthrough();

  std::string config_path;
  std::string out_path;
  std::string format;
  std::optional<std::uint64_t> seed;
  bool print_keys = false;
  cli.add_option("--config", config_path, "Sectioned key = value config file")
      ->check(CLI::ExistingFile);
  cli.add_option("--out", out_path, "Write data here instead of stdout");
  cli.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cli.add_option("--seed", seed, "Seed for randomized validation poses");
  cli.add_flag("--list-keys", print_keys, "Print every accepted config key and exit");

  for (const char* name : {"modes", "sweep", "noise", "range", "validate"}) {
    cli.add_subcommand(name);
  }
  cli.get_subcommand("modes")->description("Mode geometry, FSRs, linewidths, transverse spacing");
  cli.get_subcommand("sweep")->description("Frequency shift along one degree of freedom");
  cli.get_subcommand("noise")->description("Noise budget in torque, angle and frequency units");
  cli.get_subcommand("range")->description("Sensing range and overlap table");
  cli.get_subcommand("validate")->description("Closed-form vs ray-tracer oracle checks");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e);
  } catch (const CLI::ParseError& e) {
    cli.exit(e);
    return exit_config_error;
  }
  if (print_keys) {
    std::cout << config_reference();
    return exit_ok;
  }
  if (cli.get_subcommands().empty()) {
    std::cerr << cli.help() << "a command is required\n";
    return exit_config_error;
  }

  const auto command = parse_command(cli.get_subcommands().front()->get_name());

  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const zigzag::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return exit_domain_error;
  }
  if (!format.empty()) config.format = *parse_format(format);
  if (!out_path.empty()) config.output_path = out_path;
  if (seed) config.validate.seed = *seed;

  if (config.output_path.empty()) return run_guarded(*command, config, std::cout, std::cerr);
  std::ofstream file(config.output_path);
  if (!file) {
    std::cerr << "config error: cannot write '" << config.output_path << "'\n";
    return exit_config_error;
  }
  return run_guarded(*command, config, file, std::cerr);
}
