#pragma once

#include <string>
#include <vector>

namespace skeinlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;  // 0 means no time budget
};

// The eleven end-to-end acceptance checks, in order. Each check catches its own
// exceptions and reports them as failures.
std::vector<CriterionResult> run_acceptance();

}  // namespace skeinlab
