// Command-line scenario runner: evaluates scenario files or catalog entries
// and reports each check against its expected outcome.

#include <fstream>
#include <iostream>
#include <string>

#include "setconv/scenario_text.hpp"

#include "CLI11.hpp"

namespace {

struct Options {
  std::string format{"table"};
  std::string out;
  double epsilon{0.0};
  int horizon{0};
  int depth{0};
  std::uint64_t seed{0};
  bool hasEpsilon{false}, hasHorizon{false}, hasDepth{false}, hasSeed{false};
};

void addCommonFlags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opt.out, "Also write the report to this file");
  cmd->add_option("--epsilon", opt.epsilon, "Override the scenario epsilon")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--horizon", opt.horizon, "Override the scenario horizon")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--depth", opt.depth, "Override the series truncation depth")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.seed, "Override the seed for seeded checks");
}

void applyOverrides(const CLI::App* cmd, const Options& opt, setconv::Scenario& s) {
  if (cmd->count("--epsilon") > 0) s.res.epsilon = opt.epsilon;
  if (cmd->count("--horizon") > 0) s.res.horizon = opt.horizon;
  if (cmd->count("--depth") > 0) s.res.depth = opt.depth;
  if (cmd->count("--seed") > 0) s.res.seed = opt.seed;
}

int emitAndFinish(const setconv::Report& report, const Options& opt) {
  std::string text;
  if (opt.format == "csv") {
    text = setconv::emitCsv(report);
  } else if (opt.format == "json") {
    text = setconv::emitJson(report);
  } else {
    text = setconv::emitTable(report);
  }
  std::cout << text;
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) {
      std::cerr << "error: cannot write '" << opt.out << "'\n";
      return 2;
    }
    file << text;
  }
  return report.allMet ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set-convergence scenario runner"};
  app.require_subcommand(1);

  std::string scenarioPath;
  std::string builtinName;
  Options runOpt, builtinOpt;

  CLI::App* runCmd = app.add_subcommand("run", "Run a scenario file");
  runCmd->add_option("file", scenarioPath, "Scenario file")->required();
  addCommonFlags(runCmd, runOpt);

  CLI::App* builtinCmd = app.add_subcommand("builtin", "Run a catalog scenario");
  builtinCmd->add_option("name", builtinName, "Catalog scenario name")->required();
  addCommonFlags(builtinCmd, builtinOpt);

  CLI::App* listCmd = app.add_subcommand("list-builtins", "List catalog scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (listCmd->parsed()) {
      for (const std::string& id : setconv::listBuiltins()) std::cout << id << "\n";
      return 0;
    }
    if (runCmd->parsed()) {
      setconv::Scenario s = setconv::parseScenarioFile(scenarioPath);
      applyOverrides(runCmd, runOpt, s);
      return emitAndFinish(setconv::runScenario(s), runOpt);
    }
    setconv::Scenario s = setconv::builtinScenario(builtinName);
    applyOverrides(builtinCmd, builtinOpt, s);
    return emitAndFinish(setconv::runScenario(s), builtinOpt);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
}
