#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bredonite::cli {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 domain errors (bad input, invalid complex, failed verification),
// 2 usage errors (unknown subcommand, theory or suite, bad options).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bredonite::cli
