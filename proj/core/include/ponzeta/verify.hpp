#pragma once

#include <string>
#include <vector>

namespace ponzeta {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;  // first counterexample or summary
};

// Invariant suites behind the `verify` CLI subcommand.  Each check is
// deterministic (fixed seeds).
std::vector<CheckResult> verify_weyl();
std::vector<CheckResult> verify_pon();
std::vector<CheckResult> verify_zeta();
std::vector<CheckResult> verify_appendix();
std::vector<CheckResult> verify_all();

}  // namespace ponzeta
