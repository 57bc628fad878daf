#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tightcx {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
};

/// Runs the numbered acceptance criteria (all of them when `which` is
/// empty). A criterion passes when every assertion holds and it finishes
/// within its time limit. Progress lines go to `log` when given.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& which = {}, std::ostream* log = nullptr);

/// "[PASS] 3 RP2_6 ... (1.2 s / 5 s)"
std::string format_result(const CriterionResult& r);

}  // namespace tightcx
