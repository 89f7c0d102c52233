#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkmkit::cli {

// Runs one gkmkit command. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 I/O or schema error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gkmkit::cli
