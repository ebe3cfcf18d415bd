#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace patav {

enum class VerifyLevel {
    Quick,  // size caps halved, Monte-Carlo replicates reduced tenfold
    Full,
};

VerifyLevel parse_verify_level(std::string_view text);

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string measured;
    std::string tolerance;
    double seconds;
    double budget_seconds;
};

inline constexpr int kCriterionCount = 10;

/// Runs one acceptance criterion (1-based id).
CriterionResult run_criterion(int id, VerifyLevel level);

/// Runs every criterion in order, reporting each as it completes.
std::vector<CriterionResult> run_acceptance(VerifyLevel level,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] AC-05 scaled cumulant limits | measured ... | tolerance ... | 1.2s / 300s"
std::string format_result_line(const CriterionResult& r);

} // namespace patav
