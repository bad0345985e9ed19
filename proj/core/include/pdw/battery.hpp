#pragma once

#include <string>
#include <vector>

namespace pdw {

/// One check of the release battery.
struct CriterionResult {
    int number = 0;
    std::string title;
    bool passed = false;
    bool exhausted = false; // stopped by a resource bound, not by a verdict
    std::string detail;
};

int battery_size();

/// Runs one criterion (1-based). Resource exhaustion and unexpected errors
/// are reported in the result, never thrown.
CriterionResult run_criterion(int number);

std::vector<CriterionResult> run_battery();

} // namespace pdw
