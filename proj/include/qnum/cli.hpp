#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qnum {

// Executes one command line (program name excluded). Results go to out,
// diagnostics to err. Returns 0 on success, 1 when a library precondition
// rejected the input, 2 when the command line itself is malformed.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace qnum
