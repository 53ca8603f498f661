#pragma once

#include <string>
#include <vector>

namespace kappagraph {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing, diagnostic otherwise
};

// Named invariant suites runnable from the CLI: closed-forms, oracle,
// catalog, classification, inequalities, suzuki, all.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& suite);

}  // namespace kappagraph
