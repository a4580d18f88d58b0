#pragma once

#include <iosfwd>

namespace frobtrace::cli {

// Runs one command line. Exit codes: 0 ok, 1 domain failure, 2 I/O, 3 config.
// Errors go to `err` as a single line "error E_CODE: detail".
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frobtrace::cli
