#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tl {

// One reproducible claim; run() returns pass/fail plus a short evidence line.
struct CriterionResult {
    bool pass = false;
    std::string details;
};

struct Criterion {
    int id = 0;
    std::string name;
    std::function<CriterionResult()> run;
};

// The full verification suite, in order.  Exact checks only.
const std::vector<Criterion>& acceptance_criteria();

}  // namespace tl
