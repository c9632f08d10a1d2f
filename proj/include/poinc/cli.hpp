#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace poinc {

inline constexpr const char* library_version = "0.1.0";

/// Exit codes of the command-line front end.
enum ExitCode : int
{
    exit_ok = 0,
    exit_computation = 1,
    exit_usage = 2,
};

/*!
 * Run one command line (without the program name).
 *
 * Subcommands are orbit, rep, intw, statesum and replay. Every run writes
 * report.txt, results.csv and manifest.json into --out-dir.
 */
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace poinc
