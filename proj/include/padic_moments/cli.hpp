#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "padic_moments/orientations.hpp"

namespace padic {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfig = 2,
  kExitNonIntegral = 3,
};

struct RunConfig {
  std::string command;
  PrecisionProfile profile;
  Rational c;
  OrientationKind kind = OrientationKind::todd_sharp;
  std::string route = "closed";  // closed | genfn | both
  ToddSharpVariant variant = ToddSharpVariant::full;
  std::string format = "json";
  std::string out_path;
};

// Fills the per-prime defaults for anything the user left unset.
PrecisionProfile default_profile(unsigned long p, OrientationKind kind);

// Inclusive integer range "a:b" (descending allowed) or a single value.
std::vector<int> parse_range(const std::string& text);

// Runs one command; returns an ExitCode.  Output goes to out (or the
// --out file), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padic
