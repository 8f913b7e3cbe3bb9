#pragma once

#include <string>
#include <vector>

namespace decmat {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // first failure, empty when passing
};

/// The eight acceptance criteria, exact arithmetic throughout. Expected
/// values are transcribed table data, independent of the computation paths
/// they check.
std::vector<CriterionResult> run_acceptance();

}  // namespace decmat
