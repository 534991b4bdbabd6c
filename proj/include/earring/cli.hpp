#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace earring {

/// Runs one CLI request. Reports go to `out`; parse and domain errors to
/// `err`. Returns the process exit status: 0 success, 1 parse/usage
/// error, 2 invariant violation or ineligible input.
int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

} // namespace earring
