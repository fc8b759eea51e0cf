#pragma once

// Exact 64-bit integer arithmetic: primality, factorization, the
// multiplicative functions mu/phi/omega, the von Mangoldt function,
// prime sieving and omega statistics.

#include <cstdint>
#include <vector>

namespace pproot {

// Mertens constant B1 = lim (sum_{p<=x} 1/p - log log x).
inline constexpr double kMertensB1 = 0.2614972128476427838;

// Euler constant gamma = lim (sum_{n<=x} 1/n - log x).
inline constexpr double kEulerGamma = 0.5772156649015328606;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t r = m > 1 ? 1 : 0;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic for the full unsigned 64-bit range (fixed witness set,
// no probabilistic error).
bool is_prime(uint64_t n);

struct PrimeFactor {
    uint64_t prime;
    uint32_t exponent;

    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

// An integer together with its full prime factorization.
// Invariants: product of prime^exponent equals n; primes strictly
// increasing; n == 1 iff factors is empty.
struct FactoredInteger {
    uint64_t n = 1;
    std::vector<PrimeFactor> factors;
};

// Trial division for small n, Pollard rho (Brent) with deterministic
// primality certification for large n. Rejects n = 0.
FactoredInteger factor(uint64_t n);

// mu(n): (-1)^t on squarefree n with t prime factors, 0 otherwise, mu(1) = 1.
int mobius(const FactoredInteger& f);

// phi(n) = n * prod_{p|n} (1 - 1/p), computed exactly.
uint64_t euler_phi(const FactoredInteger& f);

// Number of distinct prime factors; omega(1) = 0.
int omega(const FactoredInteger& f);

// Distinct-prime-factor count straight from n, without materializing the
// factorization.
int count_distinct_prime_factors(uint64_t n);

// All divisors of n, ascending.
std::vector<uint64_t> divisors(const FactoredInteger& f);

// Lambda(n) = log p when n = p^k, 0 otherwise (natural log).
double von_mangoldt(uint64_t n);

// Primes in [lo, hi], ascending, via a segmented sieve.
std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi);

// Primes in [2, limit]. Rejects limits past the configured memory budget.
std::vector<uint64_t> prime_sieve(uint64_t limit);

struct OmegaStatsRow {
    uint64_t x = 0;
    double mean_omega = 0.0;  // (1/x) * sum_{n<=x} omega(n), exact sieve count
    double predicted = 0.0;   // log log x + B1
    double deviation = 0.0;   // mean_omega - predicted
};

// Exact mean of omega(n) over n <= x against the log log x + B1 prediction.
// Requires x >= 3 (log log guard).
OmegaStatsRow omega_average(uint64_t x);

} // namespace pproot
