// Acceptance suite: runs every reference check, one line per criterion,
// and enforces the pinned wall-clock budgets. Exits nonzero on any failure.

#include "minfill/verify.hpp"

#include <cstdio>
#include <vector>

int main() {
    minfill::VerifyOptions options;
    options.slow = true;

    std::vector<minfill::CheckResult> results = minfill::run_verification(options);

    // Budgets in seconds, matching the order of run_verification with the
    // slow checks enabled; 0 means the check is bundled into another's
    // budget. The n=7 sweep also enforces 60 s per tree internally.
    const std::vector<double> limits = {1, 1, 5, 120, 30, 600, 300, 300, 60, 0};
    if (results.size() != limits.size()) {
        std::printf("unexpected check count: %zu\n", results.size());
        return 1;
    }

    bool all_ok = true;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const minfill::CheckResult& r = results[i];
        bool within = limits[i] == 0 || r.seconds < limits[i];
        bool ok = r.pass && within;
        all_ok = all_ok && ok;
        std::printf("[%s] %s (%.2fs%s) -- %s\n", ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    limits[i] == 0 ? ", bundled" : !within ? ", over budget" : "",
                    r.detail.c_str());
    }
    std::printf("%s\n", all_ok ? "acceptance: all criteria satisfied"
                               : "acceptance: FAILURES present");
    return all_ok ? 0 : 1;
}
