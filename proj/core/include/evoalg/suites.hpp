#ifndef EVOALG_SUITES_HPP
#define EVOALG_SUITES_HPP

#include <string>
#include <vector>

namespace evoalg {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::string title;
    std::vector<Check> checks;

    bool passed() const;
};

struct SuiteInfo {
    std::string name;   // CLI name, e.g. "thm41"
    std::string title;  // one-line description
};

/// The verification suites in the order they are run by `verify all`:
/// example31, thm22, thm23, oracle, thm31, thm32, thm41, eq42, determinism.
const std::vector<SuiteInfo>& suite_catalog();

/// Throws ParseError for an unknown name. Indeterminate solver outcomes are
/// reported as failed checks, never skipped.
SuiteResult run_suite(const std::string& name, unsigned threads = 1);

}  // namespace evoalg

#endif  // EVOALG_SUITES_HPP
