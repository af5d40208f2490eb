#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ic {

// Runs the command-line front end on argv-style arguments (program name
// excluded, natural order). Results go to out, problems to err. Returns the
// process exit code: 0 success, 1 domain failure (unreadable input, failed
// verification, a cap or field-size limit), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ic
