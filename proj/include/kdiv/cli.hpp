#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdiv::cli {

// Dispatch one command line (without the program name). Exit codes:
//   0  success
//   1  usage error
//   2  hypothesis violation raised by a domain operation
//   3  verify-paper ran and at least one entry failed
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kdiv::cli
