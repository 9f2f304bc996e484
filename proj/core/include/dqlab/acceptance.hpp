// End-to-end acceptance suite: each criterion pins its tolerances in code
// and reports pass/fail with a deterministic detail string. Wall-clock
// seconds are measured for the criteria that carry runtime budgets; only
// the boolean outcome goes into machine-readable reports so identical runs
// stay byte-identical.
#pragma once

#include <string>
#include <vector>

namespace dqlab::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    bool runtime_ok = true; // criteria 1, 3, 6, 11 carry budgets
    double seconds = 0.0;   // console-only, excluded from reports
    std::string detail;     // deterministic measured values
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    bool all_passed = false;
    double total_seconds = 0.0;
};

AcceptanceReport run_acceptance();

} // namespace dqlab::acceptance
