#pragma once

// Acceptance suite: the project's verification matrix, runnable as a whole
// or criterion by criterion. Each criterion prints one [PASS]/[FAIL] line
// with its measured values.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pproot {

struct AcceptanceOptions {
    uint64_t survey_lo = 3;
    uint64_t survey_hi = 10'000'000;
    double epsilon = 1.0;
    unsigned jobs = 0;  // 0 = hardware concurrency
};

struct CriterionOutcome {
    int id = 0;
    bool pass = false;
    std::string detail;
};

// Runs the criteria named in ids (1..10; empty = all) and streams one
// result line per criterion to out. Criteria 2, 3 and 9 share a single
// survey pass.
std::vector<CriterionOutcome> run_acceptance_criteria(std::vector<int> ids,
                                                      const AcceptanceOptions& opt,
                                                      std::ostream& out);

} // namespace pproot
