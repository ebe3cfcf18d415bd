// Full acceptance suite: one line per criterion, nonzero exit if any fails.

#include "patav/acceptance.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
    const auto level = argc > 1 && std::strcmp(argv[1], "quick") == 0 ? patav::VerifyLevel::Quick
                                                                       : patav::VerifyLevel::Full;
    int failures = 0;
    patav::run_acceptance(level, [&](const patav::CriterionResult& r) {
        std::printf("%s\n", patav::format_result_line(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    });
    std::printf("%d of %d criteria passed\n", patav::kCriterionCount - failures, patav::kCriterionCount);
    return failures == 0 ? 0 : 1;
}
