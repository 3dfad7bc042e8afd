#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace raysearch {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  int threads = 0;  // <= 0 uses every core
};

/// Run the whole regression suite, printing one pass/fail line per
/// criterion to `log` as results arrive.  Returns all results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* log = nullptr);

}  // namespace raysearch
