#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlin/hypergraph.hpp"

namespace hyperlin {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitCheckFailed = 3;

/// "sha256:" followed by the hex SHA-256 of serialize(h).
std::string input_digest(const Hypergraph& h);

/// Runs every applicable theorem check on h. Each entry is
/// {name, status: pass|fail|not-applicable, witness}.
nlohmann::ordered_json theorem_checks(const Hypergraph& h, double tol = 1e-8);

/// Parses `args` (without the program name), runs the subcommand, writes
/// the report to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlin
