#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammapair {

// Runs the command-line interface against the given streams; args excludes
// the program name. Returns the process exit code: 0 on success, 2 when a
// request is infeasible or not representable, 1 on usage, IO, or internal
// errors and on failed verification gates.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gammapair
