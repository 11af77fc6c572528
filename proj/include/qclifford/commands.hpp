#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qclifford/report.hpp"

namespace qclifford {

struct CommandOptions {
  std::string command;
  int n = 2;
  int m = 2;
  std::string algebra = "sl";
  std::string variant = "both";
  std::optional<std::string> q_numeric;
  std::optional<std::string> input;  // path to a JSON file
  std::vector<std::string> scales;   // chain-experiment, one per copy
  std::optional<std::string> expr;   // eval
};

const std::vector<std::string>& command_names();

// Largest Fock dimension a command may build; QCLIFFORD_MAX_DIM overrides.
std::size_t max_fock_dimension();

/// Runs one subcommand. Usage and input problems surface as exceptions
/// (std::invalid_argument, ParseError, DomainError, LimitError); verification
/// outcomes are recorded in the returned document.
ReportDocument run_command(const CommandOptions& options);

}  // namespace qclifford
