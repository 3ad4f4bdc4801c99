#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apery::cli {

// args excludes the program name. Returns the process exit code:
// 0 ok, 1 failures found, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apery::cli
