// Acceptance suite: runs every verification criterion and prints one
// pass/fail line per item.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <exception>

#include "tl/repro.hpp"

int main() {
    int failures = 0;
    const auto& criteria = tl::acceptance_criteria();
    for (const auto& crit : criteria) {
        auto start = std::chrono::steady_clock::now();
        tl::CriterionResult res;
        try {
            res = crit.run();
        } catch (const std::exception& e) {
            res.pass = false;
            res.details = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[%2d/12] %s — %s (%lld ms)\n        %s\n", crit.id,
                    res.pass ? "PASS" : "FAIL", crit.name.c_str(),
                    static_cast<long long>(ms), res.details.c_str());
        std::fflush(stdout);
        if (!res.pass) ++failures;
    }
    std::printf("%s: %d/%zu criteria passed\n", failures == 0 ? "OK" : "FAILURES",
                static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
