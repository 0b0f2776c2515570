#pragma once

#include <string>
#include <vector>

namespace qinterp {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;  // filled on failure
};

// Runs the full acceptance suite: every realized reference value and
// structural identity at exact (zero-tolerance) comparison.
std::vector<CriterionResult> run_acceptance();

}  // namespace qinterp
