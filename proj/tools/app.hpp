#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cl2cli {

// Run the command line given argv-style arguments (program name excluded).
// Returns the process exit code: 0 on success, 1 on a domain error
// (reported on err by stable name), 2 on a parse error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cl2cli
