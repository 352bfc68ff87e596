#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace finbool {

// Parses and runs one command line (without the program name).  Reports go
// to `out` as JSON, diagnostics to `err`.  Exit codes: 0 success or property
// holds; 1 property violated (witness in the report); 2 input or format
// error; 3 resource cap exceeded; 70 internal error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace finbool
