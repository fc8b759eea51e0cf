#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "pproot/errors.hpp"
#include "pproot/lseries.hpp"

using namespace pproot;

namespace {

// Independent Lambda-series oracle: sum_{n<=N} Lambda(n)/n^2 from a local
// bit sieve, summing over prime powers directly.
double lambda_sum_oracle(uint64_t N) {
    std::vector<uint8_t> is(N + 1, 1);
    is[0] = is[1] = 0;
    for (uint64_t i = 2; i * i <= N; ++i)
        if (is[i])
            for (uint64_t j = i * i; j <= N; j += i) is[j] = 0;
    double total = 0.0;
    for (uint64_t p = 2; p <= N; ++p) {
        if (!is[p]) continue;
        double lp = std::log(static_cast<double>(p));
        for (unsigned __int128 pk = p; pk <= N; pk *= p) {
            double v = static_cast<double>(static_cast<uint64_t>(pk));
            total += lp / (v * v);
        }
    }
    return total;
}

} // namespace

TEST_CASE("zeta log derivative constant against the truncated series oracle") {
    double zld2 = zeta_log_derivative_at_2();
    CHECK(zld2 > 0.0);
    // Truncation at N with a 1/N tail correction reproduces the constant to
    // ~1e-11; require 5e-10, which pins at least 10 digits.
    double oracle = lambda_sum_oracle(10'000'000) + 1e-7;
    CHECK(std::abs(zld2 - oracle) < 5e-10);
}

TEST_CASE("zeta log derivative truncation error has the log x / x shape") {
    double zld2 = zeta_log_derivative_at_2();
    double partial = lambda_sum_oracle(1'000'000);
    CHECK(std::abs(zld2 - partial) < 2.0 * std::log(1e6) / 1e6);
}

TEST_CASE("kappa2 reference values") {
    CHECK(kappa2(3) == doctest::Approx(0.43263445701101909).epsilon(1e-12));
    CHECK(kappa2(7) == doctest::Approx(0.52942119832254711).epsilon(1e-12));
    CHECK(kappa2(101) == doctest::Approx(0.56950853029876406).epsilon(1e-12));

    // correction term vanishes monotonically as p grows
    CHECK(kappa2(3) < kappa2(7));
    CHECK(kappa2(7) < kappa2(101));
    CHECK(kappa2(101) < kappa2(1009));
    CHECK(kappa2(1009) < zeta_log_derivative_at_2());
    for (uint64_t p : {3ull, 5ull, 101ull, 999983ull}) CHECK(kappa2(p) > 0.0);
}

TEST_CASE("weighted psi-lambda sum hand checks") {
    PrimeModulus m7(7);
    CHECK(weighted_psi_lambda_sum(m7, 2, 2.0) == doctest::Approx(0.0));
    CHECK(weighted_psi_lambda_sum(m7, 3, 2.0) ==
          doctest::Approx(std::log(3.0) / 9.0).epsilon(1e-13));
    PrimeModulus m3(3);
    CHECK(weighted_psi_lambda_sum(m3, 2, 2.0) ==
          doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-13));
    CHECK_THROWS_AS(weighted_psi_lambda_sum(m7, 10, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(weighted_psi_lambda_sum(m7, 10, 0.5), std::invalid_argument);
}

TEST_CASE("principal partial sum hand checks") {
    PrimeModulus m7(7);
    double expect = std::log(2.0) / 4 + std::log(3.0) / 9 + std::log(2.0) / 16 +
                    std::log(5.0) / 25;
    CHECK(principal_partial_sum(m7, 6, 2.0) == doctest::Approx(expect).epsilon(1e-13));

    PrimeModulus m2(2);  // parity filter: even n excluded
    CHECK(principal_partial_sum(m2, 3, 2.0) ==
          doctest::Approx(std::log(3.0) / 9.0).epsilon(1e-13));
}

TEST_CASE("principal partial sum converges to kappa2 at the log x / x scale") {
    for (uint64_t p : prime_sieve(100)) {
        PrimeModulus m(p);
        for (uint64_t x : {1000ull, 10'000ull, 100'000ull}) {
            double diff = std::abs(principal_partial_sum(m, x, 2.0) - kappa2(m));
            REQUIRE(diff <= 10.0 * std::log(static_cast<double>(x)) /
                                static_cast<double>(x));
        }
    }
}

TEST_CASE("nonprincipal partial sum hand checks") {
    PrimeModulus m3(3);
    // single nontrivial character: the quadratic one mod 3, chi(2) = -1
    CHECK(nonprincipal_partial_sum(m3, 2, 2.0) ==
          doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-13));
    CHECK(nonprincipal_partial_sum(m3, 1, 2.0) == 0.0);
    PrimeModulus m7(7);
    CHECK(nonprincipal_partial_sum(m7, 1, 2.0) == 0.0);

    // frozen independent evaluation (exact character sum over n <= 1e4)
    CHECK(nonprincipal_partial_sum(m7, 10'000, 2.0) ==
          doctest::Approx(0.12092225500509196).epsilon(1e-9));
}

TEST_CASE("nonprincipal partial sums do not decay: measured grid constant") {
    // The partial sums converge to nonzero constants as x grows, so the
    // scaled quantity |S| x / 2^omega(p-1) grows linearly in x. Record the
    // measured maximum over the decomposition grid; the acceptance suite
    // pins the (unsatisfiable) <= 50 requirement and is expected red.
    double max_c = 0.0;
    uint64_t arg_p = 0, arg_x = 0;
    for (uint64_t p : prime_sieve(200)) {
        PrimeModulus m(p);
        double scale = std::pow(2.0, static_cast<double>(m.pm1().factors.size()));
        for (uint64_t x : {10ull, 100ull, 1000ull}) {
            double c = std::abs(nonprincipal_partial_sum(m, x, 2.0)) *
                       static_cast<double>(x) / scale;
            if (c > max_c) {
                max_c = c;
                arg_p = p;
                arg_x = x;
            }
        }
    }
    std::printf("measured nonprincipal grid constant: %.4f at p=%llu, x=%llu\n",
                max_c, (unsigned long long)arg_p, (unsigned long long)arg_x);
    // frozen from the independent evaluation: the maximum sits at p=5, x=1000
    CHECK(arg_p == 5);
    CHECK(arg_x == 1000);
    CHECK(max_c == doctest::Approx(143.50).epsilon(1e-3));
}

TEST_CASE("decomposition identity hand checks") {
    PrimeModulus m7(7);
    PartialSumReport r = decomposition_check(m7, 3, 2.0);
    CHECK(r.weighted_total == doctest::Approx(std::log(3.0) / 9.0).epsilon(1e-13));
    CHECK(r.weighted_total ==
          doctest::Approx(r.principal_part + r.nonprincipal_part).epsilon(1e-12));
    CHECK(r.kappa2 == doctest::Approx(kappa2(7)));
    CHECK(r.tail_estimate == doctest::Approx(std::log(3.0) / 3.0));

    PrimeModulus m3(3);
    PartialSumReport r3 = decomposition_check(m3, 2, 2.0);
    // phi(2)/2 = 1/2 splits log2/4 evenly between the two parts
    CHECK(r3.weighted_total == doctest::Approx(std::log(2.0) / 4.0).epsilon(1e-13));
    CHECK(r3.principal_part == doctest::Approx(std::log(2.0) / 8.0).epsilon(1e-13));
    CHECK(r3.nonprincipal_part == doctest::Approx(std::log(2.0) / 8.0).epsilon(1e-13));

    PartialSumReport empty = decomposition_check(m7, 1, 2.0);
    CHECK(empty.weighted_total == 0.0);
    CHECK(empty.principal_part == 0.0);
    CHECK(empty.nonprincipal_part == 0.0);
    CHECK(empty.tail_estimate == 0.0);
}

TEST_CASE("decomposition identity holds across the (p, x) grid") {
    for (uint64_t p : prime_sieve(50)) {
        PrimeModulus m(p);
        for (uint64_t x : {10ull, 100ull, 1000ull}) {
            PartialSumReport r = decomposition_check(m, x, 2.0);  // throws on mismatch
            REQUIRE(r.weighted_total >= 0.0);
            REQUIRE(std::abs(r.weighted_total - r.principal_part -
                             r.nonprincipal_part) < 1e-9);
        }
    }
}

TEST_CASE("weighted sum is positive once x reaches g*(p)") {
    for (uint64_t p : prime_sieve(200)) {
        if (p == 2) continue;
        PrimeModulus m(p);
        uint64_t gs = least_prime_primitive_root(p);
        REQUIRE(weighted_psi_lambda_sum(m, gs, 2.0) > 0.0);
        REQUIRE(weighted_psi_lambda_sum(m, gs + 10, 2.0) > 0.0);
    }
}

TEST_CASE("chebyshev psi_chi hand checks") {
    PrimeModulus m3(3);
    Character quad(m3, 2, 1);
    // chi(2) = chi(5) = -1, chi(4) = +1: -log2 + log2 - log5 = -log5
    auto v = chebyshev_psi_chi(quad, 5);
    CHECK(v.real() == doctest::Approx(-std::log(5.0)).epsilon(1e-13));
    CHECK(v.imag() == doctest::Approx(0.0));

    CHECK(std::abs(chebyshev_psi_chi(quad, 1)) == 0.0);

    // principal case: equals the plain Lambda sum with multiples of p dropped
    PrimeModulus m7(7);
    Character principal(m7, 1, 1);
    double direct = 0.0;
    for (uint64_t n = 2; n <= 500; ++n)
        if (n % 7 != 0) direct += von_mangoldt(n);
    auto v7 = chebyshev_psi_chi(principal, 500);
    CHECK(v7.real() == doctest::Approx(direct).epsilon(1e-12));
    CHECK(v7.imag() == doctest::Approx(0.0));
}

TEST_CASE("chebyshev psi_chi trivial bound") {
    for (uint64_t p : {3ull, 5ull, 7ull, 13ull, 41ull}) {
        PrimeModulus m(p);
        for (uint64_t d : divisors(m.pm1())) {
            for (const Character& chi : characters_of_order(m, d)) {
                for (uint64_t x : {100ull, 1000ull, 10'000ull}) {
                    REQUIRE(std::abs(chebyshev_psi_chi(chi, x)) <=
                            1.2 * static_cast<double>(x));
                }
            }
        }
    }
}
