// pproot command-line frontend. Thin adapter over the library: validates
// arguments, dispatches, serializes results. Exit codes: 0 success,
// 1 computation error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "pproot/acceptance.hpp"
#include "pproot/errors.hpp"
#include "pproot/lseries.hpp"
#include "pproot/survey.hpp"

namespace {

struct RunConfig {
    uint64_t n = 0;              // factor
    uint64_t p = 0;              // groot / psi / kappa / lsum
    uint64_t lo = 0, hi = 0;     // survey / verify
    uint64_t x = 0;              // lsum / omega-stats
    uint64_t limit = 0;          // avg-nres
    double s = 2.0;
    double epsilon = 1.0;
    unsigned jobs = 0;
    uint64_t cap = 0;
    std::string out_path;
    std::string format = "csv";
};

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out_path.empty()) return std::cout;
    file.open(cfg.out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + cfg.out_path);
    return file;
}

int cmd_factor(const RunConfig& cfg) {
    pproot::FactoredInteger f = pproot::factor(cfg.n);
    std::string line;
    for (const auto& pf : f.factors) {
        if (!line.empty()) line += ' ';
        line += std::to_string(pf.prime);
        if (pf.exponent > 1) line += '^' + std::to_string(pf.exponent);
    }
    std::cout << line << "\n";
    return 0;
}

int cmd_groot(const RunConfig& cfg) {
    pproot::FactoredInteger pm1 = pproot::factor(cfg.p - 1);
    uint64_t g = pproot::least_primitive_root(cfg.p, pm1);
    uint64_t gs = pproot::least_prime_primitive_root(cfg.p, pm1, cfg.cap);
    uint64_t n = pproot::least_quadratic_nonresidue(cfg.p);
    std::printf("p=%llu g=%llu g*=%llu n=%llu omega=%d\n",
                (unsigned long long)cfg.p, (unsigned long long)g,
                (unsigned long long)gs, (unsigned long long)n,
                pproot::omega(pm1));
    return 0;
}

int cmd_psi(const RunConfig& cfg, std::ostream& os) {
    pproot::PrimeModulus m(cfg.p);
    os << "u,dlog,psi_char_sum,psi_direct\n";
    double max_drift = 0.0;
    uint64_t mismatches = 0;
    for (uint64_t u = 1; u < cfg.p; ++u) {
        double cs = pproot::psi_char_sum(u, m);
        int direct = pproot::psi_direct(u, m);
        max_drift = std::max(max_drift, std::abs(cs - direct));
        if (std::lround(cs) != direct) ++mismatches;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%llu,%llu,%.12g,%d\n",
                      (unsigned long long)u,
                      (unsigned long long)m.discrete_log(u), cs, direct);
        os << buf;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "# primitive_roots: %llu\n# mismatches: %llu\n# max_drift: %.3g\n",
                  (unsigned long long)pproot::euler_phi(m.pm1()),
                  (unsigned long long)mismatches, max_drift);
    os << buf;
    return mismatches == 0 ? 0 : 1;
}

int cmd_kappa(const RunConfig& cfg) {
    pproot::PrimeModulus m(cfg.p);
    std::printf("kappa2(%llu) = %.12f\n", (unsigned long long)cfg.p,
                pproot::kappa2(m));
    std::printf("-zeta'(2)/zeta(2) = %.12f\n", pproot::zeta_log_derivative_at_2());
    return 0;
}

int cmd_lsum(const RunConfig& cfg) {
    pproot::PrimeModulus m(cfg.p);
    pproot::PartialSumReport r = pproot::decomposition_check(m, cfg.x, cfg.s);
    std::printf("p: %llu\nx: %llu\ns: %g\n", (unsigned long long)r.p,
                (unsigned long long)r.x, r.s);
    std::printf("weighted_total: %.12g\n", r.weighted_total);
    std::printf("principal_part: %.12g\n", r.principal_part);
    std::printf("nonprincipal_part: %.12g\n", r.nonprincipal_part);
    std::printf("kappa2: %.12g\n", r.kappa2);
    std::printf("tail_estimate: %.12g\n", r.tail_estimate);
    return 0;
}

int cmd_survey(const RunConfig& cfg, std::ostream& os) {
    bool csv = cfg.format == "csv";
    if (csv) os << pproot::survey_csv_header() << "\n";
    pproot::SurveySummary s = pproot::survey_range(
        cfg.lo, cfg.hi, cfg.epsilon, cfg.jobs, [&](const pproot::SurveyRecord& r) {
            if (csv) {
                os << pproot::survey_csv_row(r) << "\n";
            } else {
                char buf[256];
                std::snprintf(buf, sizeof buf,
                              "p=%llu g=%llu g_star=%llu n_qr=%llu omega_pm1=%u "
                              "bound_case1=%.6g bound_case2=%.6g ratio2=%.6g "
                              "exceptional=%d\n",
                              (unsigned long long)r.p, (unsigned long long)r.g,
                              (unsigned long long)r.g_star,
                              (unsigned long long)r.n_qr, r.omega_pm1,
                              r.bound_case1, r.bound_case2, r.ratio2,
                              r.exceptional ? 1 : 0);
                os << buf;
            }
        });
    pproot::write_survey_summary(os, s);
    return 0;
}

int cmd_avg_nres(const RunConfig& cfg) {
    pproot::NresAverage a = pproot::average_nres(
        cfg.limit, [](uint64_t at, double avg, uint64_t count) {
            std::printf("limit=%llu average=%.6f count=%llu\n",
                        (unsigned long long)at, avg, (unsigned long long)count);
        });
    std::printf("average: %.6f\ncount: %llu\n", a.average,
                (unsigned long long)a.count);
    return 0;
}

int cmd_omega_stats(const RunConfig& cfg) {
    pproot::OmegaStatsRow row = pproot::omega_average(cfg.x);
    std::printf("x: %llu\nmean_omega: %.9f\npredicted: %.9f\ndeviation: %+.9f\n",
                (unsigned long long)row.x, row.mean_omega, row.predicted,
                row.deviation);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    pproot::AcceptanceOptions opt;
    opt.survey_lo = cfg.lo;
    opt.survey_hi = cfg.hi;
    opt.epsilon = cfg.epsilon;
    opt.jobs = cfg.jobs;
    auto results = pproot::run_acceptance_criteria({}, opt, std::cout);
    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"primitive-root toolkit: factorization, characters, "
                 "L-series partial sums, and prime surveys"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* factor_cmd = app.add_subcommand("factor", "prime factorization of N");
    factor_cmd->add_option("N", cfg.n, "integer >= 1")->required();

    auto* groot_cmd =
        app.add_subcommand("groot", "least primitive root data for one prime");
    groot_cmd->add_option("P", cfg.p, "odd prime")->required();
    groot_cmd->add_option("--cap", cfg.cap,
                          "prime primitive root search cap (0 = max(1e6, p))");

    auto* psi_cmd = app.add_subcommand(
        "psi", "indicator table: character sum vs direct order test");
    psi_cmd->add_option("P", cfg.p, "odd prime")->required();
    psi_cmd->add_option("--out", cfg.out_path, "output file (default stdout)");

    auto* kappa_cmd = app.add_subcommand("kappa", "kappa2 constant for one prime");
    kappa_cmd->add_option("P", cfg.p, "prime >= 3")->required();

    auto* lsum_cmd = app.add_subcommand(
        "lsum", "weighted partial sum and its principal/nonprincipal split");
    lsum_cmd->add_option("P", cfg.p, "prime")->required();
    cfg.x = 1000;
    lsum_cmd->add_option("X", cfg.x, "truncation limit (default 1000)");
    lsum_cmd->add_option("S", cfg.s, "exponent s > 1 (default 2)");
    lsum_cmd->add_option("--x", cfg.x, "truncation limit");
    lsum_cmd->add_option("--s", cfg.s, "exponent s > 1");

    auto* survey_cmd = app.add_subcommand("survey", "per-prime records over a range");
    survey_cmd->add_option("LO", cfg.lo, "range start (>= 3)")->required();
    survey_cmd->add_option("HI", cfg.hi, "range end (inclusive)")->required();
    survey_cmd->add_option("--epsilon", cfg.epsilon, "case-1 exponent (default 1.0)");
    survey_cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");
    survey_cmd->add_option("--out", cfg.out_path, "output file (default stdout)");
    survey_cmd->add_option("--format", cfg.format, "csv | text")
        ->check(CLI::IsMember({"csv", "text"}));

    auto* avg_cmd = app.add_subcommand("avg-nres",
                                       "average least quadratic nonresidue");
    avg_cmd->add_option("LIMIT", cfg.limit, "upper bound (>= 3)")->required();

    auto* omega_cmd = app.add_subcommand("omega-stats",
                                         "mean of omega(n) vs log log x + B1");
    omega_cmd->add_option("X", cfg.x, "range limit (>= 3)")->required();

    auto* verify_cmd = app.add_subcommand(
        "verify", "run the acceptance criteria (survey criteria over [LO, HI])");
    verify_cmd->add_option("LO", cfg.lo, "survey range start")->required();
    verify_cmd->add_option("HI", cfg.hi, "survey range end")->required();
    verify_cmd->add_option("--epsilon", cfg.epsilon, "case-1 exponent");
    verify_cmd->add_option("--jobs", cfg.jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    // Validate before any computation starts.
    try {
        if (*factor_cmd && cfg.n == 0)
            throw std::invalid_argument("factor: N must be >= 1");
        for (auto* c : {groot_cmd, psi_cmd, kappa_cmd})
            if (*c && (cfg.p < 3 || !pproot::is_prime(cfg.p)))
                throw std::invalid_argument("P must be a prime >= 3");
        if (*lsum_cmd) {
            if (!pproot::is_prime(cfg.p))
                throw std::invalid_argument("lsum: P must be prime");
            if (!(cfg.s > 1.0))
                throw std::invalid_argument("lsum: S must be > 1");
        }
        if ((*survey_cmd || *verify_cmd)) {
            if (cfg.lo < 3 || cfg.lo > cfg.hi)
                throw std::invalid_argument("need 3 <= LO <= HI");
            if (!(cfg.epsilon > 0.0))
                throw std::invalid_argument("--epsilon must be positive");
        }
        if (*avg_cmd && cfg.limit < 3)
            throw std::invalid_argument("avg-nres: LIMIT must be >= 3");
        if (*omega_cmd && cfg.x < 3)
            throw std::invalid_argument("omega-stats: X must be >= 3");
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::ofstream file;
        if (*factor_cmd) return cmd_factor(cfg);
        if (*groot_cmd) return cmd_groot(cfg);
        if (*psi_cmd) return cmd_psi(cfg, open_output(cfg, file));
        if (*kappa_cmd) return cmd_kappa(cfg);
        if (*lsum_cmd) return cmd_lsum(cfg);
        if (*survey_cmd) return cmd_survey(cfg, open_output(cfg, file));
        if (*avg_cmd) return cmd_avg_nres(cfg);
        if (*omega_cmd) return cmd_omega_stats(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
