#pragma once

#include <string>
#include <vector>

namespace squarefold::golden {

/// One failed comparison of a published value against the library's output.
struct Mismatch {
    std::string check;
    std::string expected;
    std::string actual;
};

struct GoldenOutcome {
    long long checks = 0;
    std::vector<Mismatch> mismatches;
    std::vector<std::string> citations;

    bool ok() const { return mismatches.empty(); }
};

/// Replays every published golden value against the library. The expected
/// numbers are embedded as data, not recomputed, so a formula regression
/// cannot silently update them.
GoldenOutcome run_golden_suite();

}  // namespace squarefold::golden
