#pragma once

#include <string>
#include <vector>

namespace graphcurv::verify {

struct CheckResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

// Reference suite pinning the published closed-form values and the library's
// own invariants. Each entry maps to one acceptance criterion.
constexpr int suite_version = 1;

std::vector<CheckResult> run_paper_checks();

std::string verify_report_json(const std::vector<CheckResult>& results);

} // namespace graphcurv::verify
