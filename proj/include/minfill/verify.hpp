#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minfill {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 12347;
    int jobs = 1;
    bool slow = false;  // include the n=7 count sweep and the bound sweeps
};

/// Runs the reference verification suite: golden fixtures for n=4,5,6, the
/// n=7 vertex counts (slow), the full-rank sweep, the multiplicity and
/// determinant bound sweeps (slow), strong duality and filling certificates
/// on seeded random spaces, the mf equality check, and tour coherence.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace minfill
