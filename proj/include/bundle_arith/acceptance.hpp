#pragma once

// The acceptance criteria as runnable checks. Shared by the acceptance test
// binary and `bundle-arith report`.

#include <string>
#include <vector>

namespace bundle_arith::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0.0;
    double limit_seconds = 0.0;      ///< 0 when the criterion has no time bound
    std::vector<std::string> notes;  ///< observed values, one line each
};

inline constexpr int kCriterionCount = 9;

/// Runs criterion `id` (1-based). Time limits are part of the verdict.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// One line per criterion: "[PASS] 4  title  (1.23 s / 30 s)" plus indented notes.
std::string format_table(const std::vector<CriterionResult>& results, bool with_notes = true);

}  // namespace bundle_arith::acceptance
