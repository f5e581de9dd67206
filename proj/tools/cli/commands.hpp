#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cli/json_writer.hpp"
#include "milnor/error.hpp"
#include "milnor/singular.hpp"

namespace milnor::cli {

inline constexpr const char* kSchema = "milnor-atlas/1";
inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Text, Json };

enum ExitCode : int {
  kExitOk = 0,
  kExitVerdictFail = 1,
  kExitUsage = 2,
  kExitNonConvergence = 3,
};

struct JobConfig {
  std::vector<std::string> polynomials;
  std::optional<double> epsilon;  // commands default to 1 (verify: per suite)
  std::optional<double> tolerance_rank;
  std::optional<double> tolerance_fold;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Text;

  std::optional<std::string> point;
  bool scan = false;
  bool circles = false;
  int restarts = 64;
  int iterations = 300;

  std::string suite;
  std::vector<int> m_values;
  std::vector<int> n_values;

  Tolerances tolerances() const;
  double epsilon_or_default() const { return epsilon.value_or(1.0); }
};

struct CommandResult {
  Json document;
  std::string text;
  int exit_code = kExitOk;

  /// The report in the configured format.
  std::string render(OutputFormat format) const;
};

CommandResult cmd_weights(const JobConfig& config);
CommandResult cmd_singular(const JobConfig& config);
CommandResult cmd_fold(const JobConfig& config);
CommandResult cmd_verify(const JobConfig& config);

int exit_code_for(ErrorCode code);

/// Points on the command line may be off the sphere by this much (relative)
/// before they are rejected; they are rescaled onto it otherwise.
inline constexpr double kPointSlack = 1e-4;

}  // namespace milnor::cli
