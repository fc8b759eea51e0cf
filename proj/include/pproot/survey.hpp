#pragma once

// Batch verification engine: sweeps primes, computes
// (g(p), g*(p), n(p), omega(p-1)) and the associated bound checks, and
// folds extremal records into a summary. Record emission is streamed in
// ascending p and is deterministic regardless of the worker count.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

#include "pproot/characters.hpp"

namespace pproot {

struct SurveyRecord {
    uint64_t p = 0;
    uint64_t g = 0;            // least primitive root
    uint64_t g_star = 0;       // least prime primitive root
    uint64_t n_qr = 0;         // least quadratic nonresidue
    uint32_t omega_pm1 = 0;    // distinct prime factors of p-1
    double bound_case1 = 0.0;  // (log p)^(1+epsilon)
    double bound_case2 = 0.0;  // p^(5 / log log p)
    double ratio2 = 0.0;       // g_star / bound_case2
    bool exceptional = false;  // every prime factor of p-1 is <= log p
};

struct SurveySummary {
    uint64_t lo = 0, hi = 0;
    double epsilon = 1.0;
    uint64_t count = 0;
    uint64_t max_g_star = 0, max_g_star_p = 0;
    double max_ratio2 = 0.0;
    uint64_t max_ratio2_p = 0;
    uint64_t case1_violations = 0;  // g_star > (log p)^(1+epsilon)
    double mean_n_qr = 0.0;
    double omega_exponent_max = 0.0;  // max omega(p-1) log 2 log log p / log p
};

using RecordSink = std::function<void(const SurveyRecord&)>;

// One record per prime in [lo, hi] (inclusive), 3 <= lo <= hi. The sink
// sees records in ascending p. jobs = 0 selects the hardware thread count.
// Rejects hi beyond the configured compute budget.
SurveySummary survey_range(uint64_t lo, uint64_t hi, double epsilon,
                           unsigned jobs, const RecordSink& sink);

// g_star <= p^(5 / log log p).
bool verify_bound_case2(const SurveyRecord& r);

// g_star <= (log p)^(1+epsilon). Failures are expected for small and
// exceptional primes; they are counted, not asserted.
bool verify_bound_case1(const SurveyRecord& r, double epsilon);

// True iff every prime factor q of p-1 satisfies q <= log p.
bool is_exceptional(uint64_t p, const FactoredInteger& pm1);
bool is_exceptional(const PrimeModulus& m);

struct NresAverage {
    double average = 0.0;
    uint64_t count = 0;  // odd primes <= limit
};

// Running average of n(p) over odd primes p <= limit (p = 2 excluded by
// convention). The optional callback observes the running average at each
// power-of-ten checkpoint.
using NresCheckpoint = std::function<void(uint64_t limit, double average, uint64_t count)>;
NresAverage average_nres(uint64_t limit, const NresCheckpoint& checkpoint = {});

// max over primes p <= limit of omega(p-1) log 2 log log p / log p.
// Requires limit >= 17.
double omega_exponent_scan(uint64_t limit, unsigned jobs = 0);

// CSV serialization: documented header row, reals with 6 significant
// digits, integers exact.
std::string survey_csv_header();
std::string survey_csv_row(const SurveyRecord& r);
void write_survey_summary(std::ostream& os, const SurveySummary& s);

} // namespace pproot
