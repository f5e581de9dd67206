#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using milnor::cli::CommandResult;
using milnor::cli::JobConfig;

struct Flags {
  bool json = false;
  std::string output;
};

void add_common(CLI::App& cmd, JobConfig& config, Flags& flags) {
  cmd.add_option("--epsilon", config.epsilon, "Sphere radius (default 1)");
  cmd.add_option("--tolerance-rank", config.tolerance_rank, "Rank tolerance on the dependence margin");
  cmd.add_option("--tolerance-fold", config.tolerance_fold, "Relative determinant tolerance of the fold test");
  cmd.add_option("--seed", config.seed, "Random seed");
  cmd.add_flag("--json", flags.json, "Emit the JSON report");
  cmd.add_option("-o,--output", flags.output, "Write the report to a file instead of stdout");
}

void add_search(CLI::App& cmd, JobConfig& config) {
  cmd.add_option("--restarts", config.restarts, "Sphere search restarts")->check(CLI::PositiveNumber);
  cmd.add_option("--iterations", config.iterations, "Descent iterations per restart")->check(CLI::PositiveNumber);
}

int emit(const CommandResult& result, const Flags& flags) {
  const auto format = flags.json ? milnor::cli::OutputFormat::Json : milnor::cli::OutputFormat::Text;
  const std::string body = result.render(format);
  if (!flags.output.empty()) {
    std::ofstream out(flags.output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << flags.output << "\n";
      return milnor::cli::kExitUsage;
    }
    out << body;
  } else if (result.document.value("status", "") == "error" && !flags.json) {
    std::cerr << body;
  } else {
    std::cout << body;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular points of Milnor fibration product maps"};
  app.require_subcommand(1);
  app.set_version_flag("--version", milnor::cli::kToolVersion);

  JobConfig config;
  Flags flags;

  auto* weights = app.add_subcommand("weights", "Weights of weighted homogeneous polynomials");
  weights->add_option("polynomials", config.polynomials, "Polynomials f1 ... fm")->required();
  add_common(*weights, config, flags);

  auto* singular = app.add_subcommand("singular", "Singularity test at a point, sphere scan or circle count");
  singular->add_option("polynomials", config.polynomials, "Polynomials f1 ... fm")->required();
  singular->add_option("--point", config.point, "Comma-separated complex coordinates");
  singular->add_flag("--scan", config.scan, "Multi-start search of the sphere");
  singular->add_flag("--circles", config.circles, "Singular circles of a homogeneous pair in two variables");
  add_common(*singular, config, flags);
  add_search(*singular, config);

  auto* fold = app.add_subcommand("fold", "Fold test at a singular point of a pair (f, g)");
  fold->add_option("polynomials", config.polynomials, "Polynomials f g")->required()->expected(2);
  fold->add_option("--point", config.point, "Comma-separated complex coordinates")->required();
  add_common(*fold, config, flags);

  auto* verify = app.add_subcommand("verify", "Run a named verification suite (or 'all')");
  verify->add_option("suite", config.suite, "Suite name")->required();
  verify->add_option("--m", config.m_values, "Exponents m");
  verify->add_option("--n", config.n_values, "Variable counts n");
  add_common(*verify, config, flags);
  add_search(*verify, config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : milnor::cli::kExitUsage;
  }

  try {
    if (*weights) return emit(milnor::cli::cmd_weights(config), flags);
    if (*singular) return emit(milnor::cli::cmd_singular(config), flags);
    if (*fold) return emit(milnor::cli::cmd_fold(config), flags);
    return emit(milnor::cli::cmd_verify(config), flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return milnor::cli::kExitUsage;
  }
}
