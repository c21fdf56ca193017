#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace recoh {

enum class SelftestScale { quick, full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double max_dev = 0.0;  // worst deviation observed, in the criterion's own units
    double tolerance = 0.0;
    std::string note;
};

/// Runs the validation suite at the requested scale. `full` uses the
/// contractual sample counts (a few minutes); `quick` shrinks them to run in
/// seconds while keeping every tolerance identical. All randomness derives
/// from `seed`.
std::vector<CriterionResult> run_selftest(SelftestScale scale, std::uint64_t seed);

/// Prints one [PASS]/[FAIL] line per criterion; returns true iff all passed.
bool print_selftest(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace recoh
