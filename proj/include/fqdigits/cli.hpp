#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fqdigits {

/// Runs the command-line surface (subcommands expand, tables, sweep, order,
/// intscan) against the given streams. Deterministic: identical args produce
/// byte-identical out content (timing lines go to err). Returns the process
/// exit code: 0 iff no verification failure and no parse/contract error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fqdigits
