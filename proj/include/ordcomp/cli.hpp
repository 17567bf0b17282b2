#ifndef ORDCOMP_CLI_HPP
#define ORDCOMP_CLI_HPP

#include <iosfwd>

namespace ordcomp {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitInvalidInput = 2,
  kExitEngineBug = 3,
};

// Parses argv (argv[0] is the program name), runs the subcommand and writes
// the report to `out` and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordcomp

#endif  // ORDCOMP_CLI_HPP
