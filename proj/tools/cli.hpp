#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stralg::cli {

enum ExitCode : int { Ok = 0, ParseFailure = 2, DomainFailure = 3, InternalFailure = 4 };

// Runs one command; `args` excludes the program name. The JSON document goes
// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stralg::cli
