#pragma once

#include <string>
#include <vector>

namespace lel {

// Exit codes: 0 verdict-pass, 1 verdict-fail (audit failure, rejected
// derivation, countermodel found), 2 usage or parse error.
struct CliResult {
  int code = 0;
  std::string out;  // machine-readable JSON
  std::string err;  // one-line human summaries
};

// The complete command-line surface, callable in-process (the binary's main
// is a thin wrapper; tests drive this directly).  `args` excludes argv[0].
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace lel
