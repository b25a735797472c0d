#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confop {

// Exit codes of the command-line driver; every failure path maps onto one.
enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 2,
    exit_resonant = 3,
    exit_not_invariant = 4,
    exit_empty_classification = 5,
    exit_io = 6,
};

// Runs one invocation. args exclude the program name. Operator documents are
// read from `in` when a path argument is "-" or omitted. Payload goes to
// `out` and is byte-deterministic for identical invocations; diagnostics go
// to `err` and are colored only when `color` is set (the binary enables it
// for terminals unless NO_COLOR is present in the environment).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, bool color = false);

}  // namespace confop
