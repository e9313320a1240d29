// Command-line surface tying the pipeline together for scripts and tests.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freezetag {

// Runs one invocation (args excludes the program name) and returns the
// process exit status: 0 success, 1 property refuted (invalid schedule,
// unsatisfiable formula, failed roundtrip), 2 usage or input error.
// Subcommands: gen-cnf, normalize, reduce, witness, verify, solve, bounds,
// roundtrip. Verdicts go to out as single-line JSON; diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freezetag
