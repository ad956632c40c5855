#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace spinmod::verify {

struct Check {
    std::string name;
    /// Formula anchor in the source argument, or "oracle: ..." for derived values.
    std::string anchor;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;
    double elapsed_ms = 0.0;
};

class UnknownSuite : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// boundary, arf, euler, induction, relations, all.
[[nodiscard]] const std::vector<std::string>& suite_names();

/// Runs one suite. Throws UnknownSuite for names outside suite_names().
[[nodiscard]] VerificationReport run_verify(const std::string& suite);

} // namespace spinmod::verify
