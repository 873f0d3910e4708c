#ifndef IHX_VERIFY_HPP
#define IHX_VERIFY_HPP

#include <string>
#include <vector>

namespace ihx {

/// One expected/actual comparison inside a verification suite.
struct CheckResult {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Names of the built-in cross-check suites, in canonical order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite; throws std::invalid_argument listing the available
/// suites when the name is unknown. Check failures are data, not errors.
SuiteResult run_verify_suite(const std::string& name);

std::vector<SuiteResult> run_all_suites();

} // namespace ihx

#endif
