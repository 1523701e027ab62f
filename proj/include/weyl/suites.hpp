#ifndef WEYL_SUITES_HPP
#define WEYL_SUITES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "weyl/parallel.hpp"

namespace weyl {

/// Process exit codes shared by the CLI and the suites.
enum class Outcome { Pass = 0, Usage = 1, Counterexample = 2, Inconclusive = 3 };

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool inconclusive = false;  // a check could not be decided (truncation, infinite piece)

  Outcome outcome() const;
  std::size_t failures() const;
  nlohmann::json toJson() const;
};

struct SuiteOptions {
  ExecPolicy policy = ExecPolicy::Parallel;
};

/// identities, eulerian, tor-concentration, ext-concentration, duality,
/// derham-shift, model-consistency.
std::vector<std::string> suiteNames();

/// Runs a named suite; throws Error on an unknown name.
SuiteResult runSuite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace weyl

#endif
