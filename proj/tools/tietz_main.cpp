// SPDX-License-Identifier: Apache-2.0
//
// tietz spectrum <config> | wavefunction <config> --nr N --l L | validate <config>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tietz/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the improved Tietz potential"};
  app.require_subcommand(1);

  std::string format = "csv";
  std::string out_path;
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", out_path, "output file (default stdout)");

  std::string config_path;
  int nr = 0;
  int l = 0;
  auto* spectrum = app.add_subcommand("spectrum", "energy levels");
  spectrum->add_option("config", config_path)->required();
  auto* wavefunction = app.add_subcommand("wavefunction", "sampled normalized chi(r)");
  wavefunction->add_option("config", config_path)->required();
  wavefunction->add_option("--nr", nr)->required();
  wavefunction->add_option("--l", l)->default_val(0);
  auto* validate = app.add_subcommand("validate", "compare against the finite-difference oracle");
  validate->add_option("config", config_path)->required();
  // accept the global flags after the subcommand as well
  for (auto* sub : {spectrum, wavefunction, validate}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tietz::cli::kExitFailure;
  }

  try {
    auto cfg = tietz::cli::load_config(config_path);
    cfg.format = format == "json" ? tietz::cli::OutputFormat::Json : tietz::cli::OutputFormat::Csv;
    cfg.output_path = out_path;

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path);
      if (!file) throw tietz::Error("cannot open output file '" + out_path + "'");
    }
    std::ostream& out = out_path.empty() ? std::cout : file;

    int code = tietz::cli::kExitFailure;
    if (*spectrum) {
      code = tietz::cli::cmd_spectrum(cfg, out);
      if (code == tietz::cli::kExitEmpty) std::cerr << "no bound states\n";
    } else if (*wavefunction) {
      code = tietz::cli::cmd_wavefunction(cfg, nr, l, out);
      if (code == tietz::cli::kExitEmpty) std::cerr << "no state with nr=" << nr << " l=" << l << "\n";
    } else if (*validate) {
      code = tietz::cli::cmd_validate(cfg, out);
    }
    out.flush();
    if (!out) throw tietz::Error("write failed");
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tietz::cli::kExitFailure;
  }
}
