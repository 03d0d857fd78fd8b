#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "forge/cli.hpp"
#include "forge/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"forge: effective three-body Hamiltonian engineering in driven spin chains"};
  app.require_subcommand(1);

  const std::vector<std::string> commands{"optimize",    "effham",   "robustness",
                                          "chain-exact", "cluster-prep", "xy-demo",
                                          "crosstalk",   "platform-map", "echo"};
  std::string config_path;
  std::string out_dir = "out";
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--out", out_dir, "output directory (default: out)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    nlohmann::json config = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw forge::config_error("cannot open config file " + config_path);
      try {
        config = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw forge::config_error(std::string("config parse error: ") + e.what());
      }
    }
    // A command key in the file must agree with the subcommand.
    if (config.contains("command")) {
      if (!config.at("command").is_string() ||
          config.at("command").get<std::string>() != command)
        throw forge::config_error("config 'command' does not match the subcommand");
      config.erase("command");
    }
    if (config.contains("output_dir")) {
      if (!config.at("output_dir").is_string())
        throw forge::config_error("'output_dir' must be a string");
      out_dir = config.at("output_dir").get<std::string>();
      config.erase("output_dir");
    }
    forge::run_command(command, config, out_dir);
  } catch (const forge::config_error& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: numerical: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
