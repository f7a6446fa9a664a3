// deon — command line front end for the deontic update semantics engine.
//
//   deon run <file> [--explain] [--max-atoms N] [--max-premises N]
//
// Reads a norm file (or standard input when the path is `-`), prints the
// query report to stdout and diagnostics to stderr. Exit code 0 on
// success regardless of verdicts, 2 on parse errors, 3 on engine errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "deon/deon.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact reasoning over defeasible obligations"};
  app.require_subcommand(1);

  std::string path = "-";
  deon::RunOptions opts;
  CLI::App* run_cmd = app.add_subcommand("run", "process a norm file");
  run_cmd->add_option("file", path, "norm file path, or - for stdin");
  run_cmd->add_flag("--explain", opts.explain,
                    "include qualifying orders and diagnosis witnesses");
  run_cmd->add_option("--max-atoms", opts.max_atoms, "vocabulary size cap")
      ->capture_default_str();
  run_cmd->add_option("--max-premises", opts.max_premises,
                      "premise count cap for 'query valid'")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  deon::RunResult result;
  if (path == "-") {
    result = deon::run(std::cin, opts);
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot open '" << path << "'\n";
      return 2;
    }
    result = deon::run(in, opts);
  }

  std::cout << (result.exit_code == 0 ? result.report.text() : result.report.human_text);
  if (!result.error.empty()) std::cerr << result.error << "\n";
  return result.exit_code;
}
