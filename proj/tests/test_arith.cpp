#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "pproot/arith.hpp"

using namespace pproot;

namespace {

// Independent factorization oracle: smallest-prime-factor sieve.
std::vector<uint32_t> spf_sieve(uint32_t n) {
    std::vector<uint32_t> spf(n + 1, 0);
    for (uint32_t i = 2; i <= n; ++i) {
        if (spf[i] != 0) continue;
        for (uint64_t j = i; j <= n; j += i)
            if (spf[j] == 0) spf[j] = i;
    }
    return spf;
}

std::vector<uint8_t> bit_sieve(uint32_t n) {
    std::vector<uint8_t> is(n + 1, 1);
    is[0] = is[1] = 0;
    for (uint64_t i = 2; i * i <= n; ++i)
        if (is[i])
            for (uint64_t j = i * i; j <= n; j += i) is[j] = 0;
    return is;
}

} // namespace

TEST_CASE("is_prime basics and fixtures") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(341));         // 2-pseudoprime
    CHECK_FALSE(is_prime(561));         // Carmichael
    CHECK_FALSE(is_prime(3215031751ULL));
    CHECK(is_prime(1'000'000'007ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime

    // Mersenne exponent table (published list, exponents <= 127).
    const uint64_t mersenne_exponents[] = {2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127};
    auto is_mersenne_exponent = [&](uint64_t e) {
        for (uint64_t m : mersenne_exponents)
            if (m == e) return true;
        return false;
    };
    CHECK(is_mersenne_exponent(61));
    CHECK(is_prime((uint64_t{1} << 61) - 1));
    CHECK_FALSE(is_mersenne_exponent(29));
    CHECK_FALSE(is_prime((uint64_t{1} << 29) - 1));
}

TEST_CASE("is_prime agrees with a bit sieve up to 1e5") {
    auto is = bit_sieve(100'000);
    for (uint32_t n = 0; n <= 100'000; ++n) {
        REQUIRE(is_prime(n) == (is[n] != 0));
    }
}

TEST_CASE("factor examples") {
    auto f12 = factor(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == PrimeFactor{2, 2});
    CHECK(f12.factors[1] == PrimeFactor{3, 1});

    CHECK(factor(1).factors.empty());
    CHECK(factor(1).n == 1);

    auto f2310 = factor(2310);
    REQUIRE(f2310.factors.size() == 5);
    uint64_t expect[] = {2, 3, 5, 7, 11};
    for (size_t i = 0; i < 5; ++i) {
        CHECK(f2310.factors[i].prime == expect[i]);
        CHECK(f2310.factors[i].exponent == 1);
    }

    CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor handles 64-bit composites via Pollard rho") {
    uint64_t n = 1'000'000'007ULL * 1'000'000'009ULL;
    auto f = factor(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == PrimeFactor{1'000'000'007ULL, 1});
    CHECK(f.factors[1] == PrimeFactor{1'000'000'009ULL, 1});

    auto f2 = factor(uint64_t{1} << 62);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0] == PrimeFactor{2, 62});

    auto f3 = factor((uint64_t{1} << 61) - 1);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].exponent == 1);
}

TEST_CASE("factor, mobius, euler_phi, omega agree with the sieve oracle up to 1e5") {
    const uint32_t N = 100'000;
    auto spf = spf_sieve(N);
    for (uint32_t n = 1; n <= N; ++n) {
        auto f = factor(n);
        // reassemble
        uint64_t prod = 1;
        for (const auto& pf : f.factors) {
            for (uint32_t e = 0; e < pf.exponent; ++e) prod *= pf.prime;
            REQUIRE(is_prime(pf.prime));
        }
        REQUIRE(prod == n);
        // ascending primes
        for (size_t i = 1; i < f.factors.size(); ++i)
            REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);

        // oracle factorization from the spf sieve
        int t = 0;
        bool squarefree = true;
        uint32_t m = n;
        while (m > 1) {
            uint32_t p = spf[m], e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            ++t;
            if (e > 1) squarefree = false;
        }
        REQUIRE(omega(f) == t);
        REQUIRE(mobius(f) == (squarefree ? (t % 2 ? -1 : 1) : 0));

        // phi from the oracle factorization
        uint64_t phi = n;
        m = n;
        while (m > 1) {
            uint32_t p = spf[m];
            while (m % p == 0) m /= p;
            phi = phi / p * (p - 1);
        }
        REQUIRE(euler_phi(f) == phi);
    }
}

TEST_CASE("mobius and euler_phi examples") {
    CHECK(mobius(factor(30)) == -1);
    CHECK(mobius(factor(12)) == 0);
    CHECK(mobius(factor(1)) == 1);
    CHECK(euler_phi(factor(7)) == 6);
    CHECK(euler_phi(factor(12)) == 4);
    CHECK(euler_phi(factor(2310)) == 480);
    CHECK(omega(factor(12)) == 2);
    CHECK(omega(factor(1)) == 0);
    CHECK(omega(factor(2310)) == 5);
    CHECK(count_distinct_prime_factors(2310) == 5);
    CHECK(count_distinct_prime_factors(1) == 0);
}

TEST_CASE("Moebius-totient identity holds exactly up to 1e4") {
    for (uint64_t n = 1; n <= 10'000; ++n) {
        auto f = factor(n);
        int64_t sum = 0;  // n * sum_{d|n} mu(d)/d, all terms integral
        for (uint64_t d : divisors(f)) {
            sum += mobius(factor(d)) * static_cast<int64_t>(n / d);
        }
        REQUIRE(sum == static_cast<int64_t>(euler_phi(f)));
    }
}

TEST_CASE("sum of mobius over divisors vanishes for n > 1") {
    for (uint64_t n = 1; n <= 10'000; ++n) {
        int sum = 0;
        for (uint64_t d : divisors(factor(n))) sum += mobius(factor(d));
        REQUIRE(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors enumeration") {
    CHECK(divisors(factor(12)) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(factor(1)) == std::vector<uint64_t>{1});
}

TEST_CASE("von_mangoldt examples and support") {
    CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(von_mangoldt(6) == 0.0);
    CHECK(von_mangoldt(7) == doctest::Approx(std::log(7.0)).epsilon(1e-14));
    CHECK(von_mangoldt(1) == 0.0);
    for (uint64_t n = 2; n <= 5000; ++n) {
        bool positive = von_mangoldt(n) > 0.0;
        REQUIRE(positive == (omega(factor(n)) == 1));
    }
}

TEST_CASE("prime_sieve basics and pi(1e6)") {
    CHECK(prime_sieve(10) == std::vector<uint64_t>{2, 3, 5, 7});
    CHECK(prime_sieve(2) == std::vector<uint64_t>{2});
    CHECK(prime_sieve(1'000'000).size() == 78498);

    auto is = bit_sieve(2000);
    auto band = primes_in_range(1000, 2000);
    size_t i = 0;
    for (uint32_t n = 1000; n <= 2000; ++n) {
        if (is[n]) {
            REQUIRE(band[i] == n);
            ++i;
        }
    }
    CHECK(i == band.size());

    CHECK_THROWS_AS(prime_sieve(2'000'000'000ULL), std::invalid_argument);
    CHECK_THROWS_AS(prime_sieve(1), std::invalid_argument);
}

TEST_CASE("omega_average examples") {
    auto r10 = omega_average(10);
    // omega over 1..10: 0,1,1,1,1,2,1,1,1,2
    CHECK(r10.mean_omega == doctest::Approx(1.1).epsilon(1e-12));

    auto r3 = omega_average(3);
    CHECK(r3.mean_omega == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    CHECK_THROWS_AS(omega_average(2), std::invalid_argument);
}

TEST_CASE("mean omega over 1e6 tracks log log x + B1") {
    auto row = omega_average(1'000'000);
    CHECK(row.predicted == doctest::Approx(2.8872891273236536).epsilon(1e-9));
    CHECK(std::abs(row.deviation) < 0.05);
    CHECK(row.mean_omega == doctest::Approx(2.853708).epsilon(1e-6));
}

TEST_CASE("Mertens constant re-derivation to 6+ digits") {
    // B1 = gamma + sum_p (log(1 - 1/p) + 1/p); the tail past 1e6 is ~3e-8.
    double sum = 0.0;
    for (uint64_t p : prime_sieve(1'000'000)) {
        double x = 1.0 / static_cast<double>(p);
        sum += std::log1p(-x) + x;
    }
    CHECK(kEulerGamma + sum == doctest::Approx(kMertensB1).epsilon(1e-7));
}

TEST_CASE("Euler constant re-derivation to 6+ digits") {
    const uint64_t N = 1'000'000;
    double h = 0.0;
    for (uint64_t n = N; n >= 1; --n) h += 1.0 / static_cast<double>(n);
    double derived = h - std::log(static_cast<double>(N)) - 0.5 / N +
                     1.0 / (12.0 * N * N);
    CHECK(derived == doctest::Approx(kEulerGamma).epsilon(1e-10));
}

TEST_CASE("omega(n) log log n / log n stays below 2 up to 1e6") {
    const uint32_t N = 1'000'000;
    std::vector<uint8_t> cnt(N + 1, 0);
    for (uint32_t p = 2; p <= N; ++p) {
        if (cnt[p] != 0) continue;
        for (uint64_t m = p; m <= N; m += p) ++cnt[m];
    }
    double max_val = 0.0;
    uint32_t arg = 0;
    for (uint32_t n = 3; n <= N; ++n) {
        double v = cnt[n] * std::log(std::log(n)) / std::log(n);
        if (v > max_val) {
            max_val = v;
            arg = n;
        }
    }
    CHECK(max_val < 2.0);
    CHECK(arg == 510510);  // 2*3*5*7*11*13*17
    CHECK(max_val == doctest::Approx(1.3719155574).epsilon(1e-6));
}
