#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace wreathstab {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;  // first failure, empty when passing
};

// The full verification suite: every exactly-checkable claim the library
// rests on, from the permutation-cycle Betti oracle through structure
// recovery, run at desk scale with exact arithmetic. The callback, when
// given, receives each result with its wall-clock cost in milliseconds.
std::vector<CriterionResult> run_criteria(
    const std::function<void(const CriterionResult&, double)>& on_result = {});

// Prints one PASS/FAIL line per criterion to `out` (deterministic output,
// no timings) and returns true when everything passed.
bool run_selftest(std::ostream& out);

}  // namespace wreathstab
