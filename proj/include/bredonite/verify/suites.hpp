#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bredonite::verify {

// Command-line entry point used by the degenerate-input suite to check exit
// codes: (argv without program name, out, err) -> exit code.
using CliRunner = std::function<int(const std::vector<std::string>&, std::ostream&, std::ostream&)>;

struct SuiteOptions {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  CliRunner cli;  // optional; exit-code checks are skipped when empty
};

// BREDONITE_SEED if set and numeric, else a fixed default.
std::uint64_t default_seed();

struct SuiteResult {
  std::string name;
  std::string title;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  double time_limit = 0;  // 0: no limit

  bool passed() const { return failures.empty() && (time_limit <= 0 || seconds < time_limit); }
  // "PASS <title> (<checks> checks, <s> s < <limit> s)" or FAIL with the
  // first failures.
  std::string summary() const;
};

// coefficients, burnside, borel, induction, mv, reflection, linalg,
// degenerate
const std::vector<std::string>& suite_names();

// Throws UsageError for unknown names.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace bredonite::verify
