#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgt::cli {

// Runs one command line (without the program name). Artifacts go to `out`
// unless --out names a file; failures print {"error": code, "message": ...}
// to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgt::cli
