#include "pproot/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pproot {

namespace {

// Witness set proving primality for every n < 3.3e24, which covers uint64_t.
constexpr uint64_t kMillerRabinBases[] = {2,      325,    9375,      28178,
                                          450775, 9780504, 1795265022};

bool miller_rabin(uint64_t n, uint64_t base) {
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    uint64_t x = powmod(base % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic pseudo-random stream for Pollard rho; seeded from n so that
// factor() is a pure function.
uint64_t splitmix64(uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Brent's cycle variant. n must be composite, odd, and not a prime power
// caught by trial division below.
uint64_t pollard_rho(uint64_t n) {
    uint64_t seed = n;
    while (true) {
        uint64_t c = splitmix64(seed) % (n - 1) + 1;
        uint64_t y = splitmix64(seed) % n;
        uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                uint64_t lim = std::min(m, r - k);
                for (uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_recursive(uint64_t n, std::vector<uint64_t>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_recursive(d, primes);
    factor_recursive(n / d, primes);
}

// Largest n accepted by prime_sieve; the result vector alone is ~400 MB
// there, which is the intended ceiling for a desk-scale run.
constexpr uint64_t kSieveBudget = 1'000'000'000ULL;

// Largest x accepted by omega_average (one byte of sieve state per integer).
constexpr uint64_t kOmegaBudget = 100'000'000ULL;

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    for (uint64_t b : kMillerRabinBases) {
        if (b % n == 0) continue;
        if (!miller_rabin(n, b)) return false;
    }
    return true;
}

FactoredInteger factor(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    FactoredInteger out;
    out.n = n;
    if (n == 1) return out;

    auto strip = [&](uint64_t p) {
        if (n % p != 0) return;
        uint32_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    };

    strip(2);
    strip(3);
    strip(5);
    // Wheel mod 30 over the remaining candidates.
    static constexpr uint64_t kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t d = 7;
    int w = 0;
    while (d * d <= n && d < (1u << 20)) {
        strip(d);
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) {
        std::vector<uint64_t> rest;
        factor_recursive(n, rest);
        std::sort(rest.begin(), rest.end());
        for (size_t i = 0; i < rest.size();) {
            size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.factors.push_back({rest[i], static_cast<uint32_t>(j - i)});
            i = j;
        }
    }
    return out;
}

int mobius(const FactoredInteger& f) {
    for (const auto& pf : f.factors) {
        if (pf.exponent >= 2) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

uint64_t euler_phi(const FactoredInteger& f) {
    uint64_t r = f.n;
    for (const auto& pf : f.factors) {
        r = r / pf.prime * (pf.prime - 1);
    }
    return r;
}

int omega(const FactoredInteger& f) {
    return static_cast<int>(f.factors.size());
}

int count_distinct_prime_factors(uint64_t n) {
    int c = 0;
    for (uint64_t p : {2, 3, 5}) {
        if (n % p == 0) {
            ++c;
            while (n % p == 0) n /= p;
        }
    }
    static constexpr uint64_t kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};
    uint64_t d = 7;
    int w = 0;
    while (d * d <= n && d < (1u << 20)) {
        if (n % d == 0) {
            ++c;
            while (n % d == 0) n /= d;
        }
        d += kWheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) c += omega(factor(n));
    return c;
}

std::vector<uint64_t> divisors(const FactoredInteger& f) {
    std::vector<uint64_t> ds{1};
    for (const auto& pf : f.factors) {
        size_t sz = ds.size();
        uint64_t pk = 1;
        for (uint32_t e = 1; e <= pf.exponent; ++e) {
            pk *= pf.prime;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

double von_mangoldt(uint64_t n) {
    if (n < 2) return 0.0;
    uint64_t p = 0;
    if (n % 2 == 0) {
        p = 2;
    } else {
        uint64_t d = 3;
        while (d * d <= n) {
            if (n % d == 0) {
                p = d;
                break;
            }
            d += 2;
        }
        if (p == 0) return std::log(static_cast<double>(n));  // n prime
    }
    while (n % p == 0) n /= p;
    return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    if (hi < 2 || hi < lo) return out;
    lo = std::max<uint64_t>(lo, 2);

    uint64_t root = static_cast<uint64_t>(std::sqrt(static_cast<double>(hi))) + 2;
    std::vector<uint8_t> base(root + 1, 1);
    base[0] = base[1] = 0;
    for (uint64_t i = 2; i * i <= root; ++i) {
        if (!base[i]) continue;
        for (uint64_t j = i * i; j <= root; j += i) base[j] = 0;
    }

    constexpr uint64_t kSegment = 1u << 18;
    std::vector<uint8_t> seg;
    for (uint64_t low = lo; low <= hi; low += kSegment) {
        uint64_t high = std::min(hi, low + kSegment - 1);
        seg.assign(high - low + 1, 1);
        for (uint64_t p = 2; p * p <= high && p <= root; ++p) {
            if (!base[p]) continue;
            uint64_t start = std::max(p * p, (low + p - 1) / p * p);
            for (uint64_t j = start; j <= high; j += p) seg[j - low] = 0;
        }
        for (uint64_t v = low; v <= high; ++v) {
            if (seg[v - low]) out.push_back(v);
        }
    }
    return out;
}

std::vector<uint64_t> prime_sieve(uint64_t limit) {
    if (limit < 2) throw std::invalid_argument("prime_sieve: limit must be >= 2");
    if (limit > kSieveBudget)
        throw std::invalid_argument("prime_sieve: limit exceeds memory budget");
    return primes_in_range(2, limit);
}

OmegaStatsRow omega_average(uint64_t x) {
    if (x < 3) throw std::invalid_argument("omega_average: x must be >= 3");
    if (x > kOmegaBudget)
        throw std::invalid_argument("omega_average: x exceeds memory budget");

    std::vector<uint8_t> cnt(x + 1, 0);
    for (uint64_t p = 2; p <= x; ++p) {
        if (cnt[p] != 0) continue;  // p composite would have been marked
        for (uint64_t m = p; m <= x; m += p) ++cnt[m];
    }
    uint64_t total = 0;
    for (uint64_t n = 1; n <= x; ++n) total += cnt[n];

    OmegaStatsRow row;
    row.x = x;
    row.mean_omega = static_cast<double>(total) / static_cast<double>(x);
    row.predicted = std::log(std::log(static_cast<double>(x))) + kMertensB1;
    row.deviation = row.mean_omega - row.predicted;
    return row;
}

} // namespace pproot
