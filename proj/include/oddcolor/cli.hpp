#pragma once

#include <iosfwd>
#include <string>

#include "oddcolor/graph.hpp"
#include "oddcolor/oracle.hpp"
#include "oddcolor/pipeline.hpp"
#include "oddcolor/serialization.hpp"

namespace oddcolor::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kExitColored = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRejected = 2;
inline constexpr int kExitCertificate = 3;

struct CommandResult {
  int exit_code = kExitUsage;
  std::string output;   // document written to --output or stdout
  std::string message;  // diagnostic for stderr
};

CommandResult color_command(const Graph& g, int t, bool parallel = false, PipelineTrace* trace = nullptr);
CommandResult verify_command(const Graph& g, const Json& artifact);
CommandResult decompose_command(const Graph& g, int t);
CommandResult oracle_command(const Graph& g, int t, const OracleBudget& budget);
CommandResult dot_command(const Graph& g, const Json* artifact);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace oddcolor::cli
