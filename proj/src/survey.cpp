#include "pproot/survey.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pproot {

namespace {

constexpr uint64_t kSurveyBudget = 1'000'000'000ULL;
constexpr uint64_t kBlockWidth = 1u << 16;

double log_log(uint64_t p) {
    return std::log(std::log(static_cast<double>(p)));
}

SurveyRecord make_record(uint64_t p, double epsilon) {
    FactoredInteger pm1 = factor(p - 1);
    SurveyRecord r;
    r.p = p;
    r.g = least_primitive_root(p, pm1);
    r.g_star = least_prime_primitive_root(p, pm1, /*cap=*/0);
    r.n_qr = least_quadratic_nonresidue(p);
    r.omega_pm1 = static_cast<uint32_t>(pm1.factors.size());

    double logp = std::log(static_cast<double>(p));
    r.bound_case1 = std::pow(logp, 1.0 + epsilon);
    r.bound_case2 = std::exp(5.0 / log_log(p) * logp);
    r.ratio2 = static_cast<double>(r.g_star) / r.bound_case2;
    r.exceptional = true;
    for (const auto& pf : pm1.factors) {
        if (static_cast<double>(pf.prime) > logp) {
            r.exceptional = false;
            break;
        }
    }
    return r;
}

void fold_record(SurveySummary& s, const SurveyRecord& r, uint64_t& n_qr_sum) {
    ++s.count;
    n_qr_sum += r.n_qr;
    if (r.g_star > s.max_g_star) {
        s.max_g_star = r.g_star;
        s.max_g_star_p = r.p;
    }
    if (r.ratio2 > s.max_ratio2) {
        s.max_ratio2 = r.ratio2;
        s.max_ratio2_p = r.p;
    }
    if (static_cast<double>(r.g_star) > r.bound_case1) ++s.case1_violations;
    double expo = r.omega_pm1 * std::log(2.0) * log_log(r.p) /
                  std::log(static_cast<double>(r.p));
    if (expo > s.omega_exponent_max) s.omega_exponent_max = expo;
}

// Runs fn(primes_in_block) on a worker pool over [lo, hi] split into
// fixed-width blocks; results are handed to consume(result) on the calling
// thread in block order. Block boundaries do not depend on the worker
// count, so consumption order is deterministic. A worker exception aborts
// the sweep and is rethrown on the calling thread.
template <typename Result, typename Fn, typename Consume>
void ordered_block_sweep(uint64_t lo, uint64_t hi, unsigned jobs, Fn fn,
                         Consume consume) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    uint64_t nblocks = (hi - lo) / kBlockWidth + 1;

    std::mutex mu;
    std::condition_variable ready_cv, space_cv;
    std::map<uint64_t, Result> done;
    uint64_t next_emit = 0;
    std::atomic<uint64_t> next_block{0};
    std::atomic<bool> aborted{false};
    std::exception_ptr error;
    const uint64_t max_in_flight = 2 * jobs + 2;

    auto worker = [&] {
        try {
            while (!aborted.load()) {
                uint64_t b = next_block.fetch_add(1);
                if (b >= nblocks) return;
                uint64_t blo = lo + b * kBlockWidth;
                uint64_t bhi = std::min(hi, blo + kBlockWidth - 1);
                Result res = fn(primes_in_range(blo, bhi));
                std::unique_lock lock(mu);
                space_cv.wait(lock, [&] {
                    return b < next_emit + max_in_flight || aborted.load();
                });
                if (aborted.load()) return;
                done.emplace(b, std::move(res));
                ready_cv.notify_all();
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) error = std::current_exception();
            aborted.store(true);
            ready_cv.notify_all();
            space_cv.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);

    {
        std::unique_lock lock(mu);
        while (next_emit < nblocks && !aborted.load()) {
            ready_cv.wait(lock, [&] {
                return done.count(next_emit) != 0 || aborted.load();
            });
            if (aborted.load()) break;
            Result res = std::move(done[next_emit]);
            done.erase(next_emit);
            lock.unlock();
            consume(res);
            lock.lock();
            ++next_emit;
            space_cv.notify_all();
        }
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

bool verify_bound_case2(const SurveyRecord& r) {
    return static_cast<double>(r.g_star) <= r.bound_case2;
}

bool verify_bound_case1(const SurveyRecord& r, double epsilon) {
    double bound = std::pow(std::log(static_cast<double>(r.p)), 1.0 + epsilon);
    return static_cast<double>(r.g_star) <= bound;
}

bool is_exceptional(uint64_t p, const FactoredInteger& pm1) {
    double logp = std::log(static_cast<double>(p));
    for (const auto& pf : pm1.factors) {
        if (static_cast<double>(pf.prime) > logp) return false;
    }
    return true;
}

bool is_exceptional(const PrimeModulus& m) { return is_exceptional(m.p(), m.pm1()); }

SurveySummary survey_range(uint64_t lo, uint64_t hi, double epsilon,
                           unsigned jobs, const RecordSink& sink) {
    if (lo < 3) throw std::invalid_argument("survey_range: lo must be >= 3");
    if (lo > hi) throw std::invalid_argument("survey_range: lo must be <= hi");
    if (hi > kSurveyBudget)
        throw std::invalid_argument("survey_range: hi exceeds compute budget");
    if (!(epsilon > 0.0))
        throw std::invalid_argument("survey_range: epsilon must be positive");

    SurveySummary summary;
    summary.lo = lo;
    summary.hi = hi;
    summary.epsilon = epsilon;
    uint64_t n_qr_sum = 0;

    ordered_block_sweep<std::vector<SurveyRecord>>(
        lo, hi, jobs,
        [&](std::vector<uint64_t> primes) {
            std::vector<SurveyRecord> out;
            out.reserve(primes.size());
            for (uint64_t p : primes) out.push_back(make_record(p, epsilon));
            return out;
        },
        [&](const std::vector<SurveyRecord>& block) {
            for (const auto& r : block) {
                fold_record(summary, r, n_qr_sum);
                if (sink) sink(r);
            }
        });

    summary.mean_n_qr = summary.count == 0
                            ? 0.0
                            : static_cast<double>(n_qr_sum) /
                                  static_cast<double>(summary.count);
    return summary;
}

NresAverage average_nres(uint64_t limit, const NresCheckpoint& checkpoint) {
    if (limit < 3) throw std::invalid_argument("average_nres: limit must be >= 3");
    uint64_t sum = 0, count = 0;
    uint64_t next_checkpoint = 10;
    constexpr uint64_t kSegment = 1u << 20;
    for (uint64_t lo = 3; lo <= limit; lo += kSegment) {
        uint64_t hi = std::min(limit, lo + kSegment - 1);
        for (uint64_t p : primes_in_range(lo, hi)) {
            while (checkpoint && p > next_checkpoint) {
                if (count > 0)
                    checkpoint(next_checkpoint,
                               static_cast<double>(sum) / static_cast<double>(count),
                               count);
                next_checkpoint *= 10;
            }
            sum += least_quadratic_nonresidue(p);
            ++count;
        }
    }
    return {static_cast<double>(sum) / static_cast<double>(count), count};
}

double omega_exponent_scan(uint64_t limit, unsigned jobs) {
    if (limit < 17)
        throw std::invalid_argument("omega_exponent_scan: limit must be >= 17");
    if (limit > kSurveyBudget)
        throw std::invalid_argument("omega_exponent_scan: limit exceeds compute budget");
    double best = 0.0;
    // max-fold commutes, so block order does not matter here; reuse the
    // ordered sweep for its pooling.
    ordered_block_sweep<double>(
        3, limit, jobs,
        [](std::vector<uint64_t> primes) {
            double m = 0.0;
            for (uint64_t p : primes) {
                double v = count_distinct_prime_factors(p - 1) * std::log(2.0) *
                           log_log(p) / std::log(static_cast<double>(p));
                if (v > m) m = v;
            }
            return m;
        },
        [&](double m) {
            if (m > best) best = m;
        });
    return best;
}

std::string survey_csv_header() {
    return "p,g,g_star,n_qr,omega_pm1,bound_case1,bound_case2,ratio2,exceptional";
}

std::string survey_csv_row(const SurveyRecord& r) {
    char buf[192];
    std::snprintf(buf, sizeof buf, "%llu,%llu,%llu,%llu,%u,%.6g,%.6g,%.6g,%d",
                  static_cast<unsigned long long>(r.p),
                  static_cast<unsigned long long>(r.g),
                  static_cast<unsigned long long>(r.g_star),
                  static_cast<unsigned long long>(r.n_qr), r.omega_pm1,
                  r.bound_case1, r.bound_case2, r.ratio2, r.exceptional ? 1 : 0);
    return buf;
}

void write_survey_summary(std::ostream& os, const SurveySummary& s) {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "# range: [%llu, %llu]\n"
                  "# convention: odd primes only (p >= 3)\n"
                  "# epsilon: %.6g\n"
                  "# count: %llu\n"
                  "# max_g_star: %llu at p = %llu\n"
                  "# max_ratio2: %.6g at p = %llu\n"
                  "# case1_violations: %llu\n"
                  "# mean_n_qr: %.6g\n"
                  "# omega_exponent_max: %.6g\n",
                  static_cast<unsigned long long>(s.lo),
                  static_cast<unsigned long long>(s.hi), s.epsilon,
                  static_cast<unsigned long long>(s.count),
                  static_cast<unsigned long long>(s.max_g_star),
                  static_cast<unsigned long long>(s.max_g_star_p), s.max_ratio2,
                  static_cast<unsigned long long>(s.max_ratio2_p),
                  static_cast<unsigned long long>(s.case1_violations), s.mean_n_qr,
                  s.omega_exponent_max);
    os << buf;
}

} // namespace pproot
