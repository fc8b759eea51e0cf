#include "pproot/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pproot/errors.hpp"

namespace pproot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Squarefree divisor d of q with its Moebius sign and totient, enumerated
// from the distinct primes of q.
struct SquarefreeDivisor {
    uint64_t d;
    int mu;
    uint64_t phi;
};

std::vector<SquarefreeDivisor> squarefree_divisors(const FactoredInteger& f) {
    std::vector<SquarefreeDivisor> out{{1, 1, 1}};
    for (const auto& pf : f.factors) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) {
            out.push_back({out[i].d * pf.prime, -out[i].mu,
                           out[i].phi * (pf.prime - 1)});
        }
    }
    return out;
}

// Sum of e^(2 pi i k v / d) over 1 <= k <= d with gcd(k, d) = 1.
std::complex<double> unit_root_sum(uint64_t d, uint64_t v) {
    uint64_t vd = v % d;
    std::complex<double> acc{0.0, 0.0};
    uint64_t t = 0;
    for (uint64_t k = 1; k <= d; ++k) {
        t += vd;
        if (t >= d) t -= d;
        if (std::gcd(k, d) != 1) continue;
        double ang = kTwoPi * static_cast<double>(t) / static_cast<double>(d);
        acc += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

const std::vector<uint64_t>& small_prime_table() {
    static const std::vector<uint64_t> table = primes_in_range(2, 1u << 16);
    return table;
}

} // namespace

PrimeModulus::PrimeModulus(uint64_t p) : p_(p) {
    if (!is_prime(p))
        throw std::invalid_argument("PrimeModulus: " + std::to_string(p) +
                                    " is not prime");
    pm1_ = factor(p - 1);
    tau_ = p == 2 ? 1 : least_primitive_root(p, pm1_);
    if (p < kLogTableLimit) {
        log_.assign(p, 0);
        uint64_t v = 1;
        for (uint64_t e = 0; e + 1 < p; ++e) {
            log_[v] = static_cast<uint32_t>(e);
            v = mulmod(v, tau_, p);
        }
    }
}

uint64_t PrimeModulus::discrete_log(uint64_t u) const {
    u %= p_;
    if (u == 0)
        throw std::invalid_argument("discrete_log: u is divisible by p");
    if (!log_.empty()) return log_[u];

    // Baby-step giant-step, O(sqrt p) time and space.
    uint64_t q = p_ - 1;
    uint64_t step = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(q))));
    std::unordered_map<uint64_t, uint64_t> baby;
    baby.reserve(step * 2);
    uint64_t cur = 1;
    for (uint64_t j = 0; j < step; ++j) {
        baby.emplace(cur, j);
        cur = mulmod(cur, tau_, p_);
    }
    uint64_t giant = powmod(tau_, q - step % q, p_);  // tau^(-step)
    cur = u;
    for (uint64_t i = 0; i * step <= q; ++i) {
        auto it = baby.find(cur);
        if (it != baby.end()) return (i * step + it->second) % q;
        cur = mulmod(cur, giant, p_);
    }
    throw std::logic_error("discrete_log: exhausted search (broken modulus)");
}

uint64_t multiplicative_order(uint64_t u, uint64_t p, const FactoredInteger& pm1) {
    u %= p;
    if (u == 0)
        throw std::invalid_argument("multiplicative_order: u is divisible by p");
    uint64_t d = p - 1;
    for (const auto& pf : pm1.factors) {
        for (uint32_t e = 0; e < pf.exponent; ++e) {
            if (d % pf.prime != 0 || powmod(u, d / pf.prime, p) != 1) break;
            d /= pf.prime;
        }
    }
    return d;
}

uint64_t multiplicative_order(uint64_t u, const PrimeModulus& m) {
    return multiplicative_order(u, m.p(), m.pm1());
}

bool is_primitive_root(uint64_t u, uint64_t p, const FactoredInteger& pm1) {
    u %= p;
    if (u == 0) return false;
    for (const auto& pf : pm1.factors) {
        if (powmod(u, (p - 1) / pf.prime, p) == 1) return false;
    }
    return true;
}

uint64_t least_primitive_root(uint64_t p, const FactoredInteger& pm1) {
    for (uint64_t g = 2; g < p; ++g) {
        if (is_primitive_root(g, p, pm1)) return g;
    }
    throw std::logic_error("least_primitive_root: none found (non-prime p?)");
}

uint64_t least_primitive_root(uint64_t p) {
    return least_primitive_root(p, factor(p - 1));
}

uint64_t least_prime_primitive_root(uint64_t p, const FactoredInteger& pm1,
                                    uint64_t cap) {
    if (cap == 0) cap = std::max<uint64_t>(1'000'000, p);
    for (uint64_t q : small_prime_table()) {
        if (q > cap) break;
        if (q % p == 0) continue;
        if (is_primitive_root(q, p, pm1)) return q;
    }
    uint64_t start = small_prime_table().back() + 2;
    for (uint64_t q = start; q <= cap; q += 2) {
        if (!is_prime(q) || q % p == 0) continue;
        if (is_primitive_root(q, p, pm1)) return q;
    }
    throw SearchCapExceeded("least_prime_primitive_root: no prime primitive root below cap " +
                            std::to_string(cap) + " for p = " + std::to_string(p));
}

uint64_t least_prime_primitive_root(uint64_t p, uint64_t cap) {
    return least_prime_primitive_root(p, factor(p - 1), cap);
}

uint64_t least_quadratic_nonresidue(uint64_t p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("least_quadratic_nonresidue: p must be an odd prime");
    uint64_t half = (p - 1) / 2;
    for (uint64_t n = 2;; ++n) {
        if (n % p == 0) continue;
        if (powmod(n, half, p) == p - 1) return n;
    }
}

int legendre_symbol(int64_t a, uint64_t p) {
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    int64_t sp = static_cast<int64_t>(p);
    uint64_t r = static_cast<uint64_t>((a % sp + sp) % sp);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

Character::Character(const PrimeModulus& m, uint64_t order, uint64_t index)
    : mod_(&m), order_(order), index_(index) {
    if (order == 0 || m.q() % order != 0)
        throw std::invalid_argument("Character: order must divide p-1");
    if (index < 1 || index > order || std::gcd(index, order) != 1)
        throw std::invalid_argument("Character: index must be in [1, order] and coprime to order");
}

std::complex<double> character_eval(const Character& chi, uint64_t u) {
    const PrimeModulus& m = chi.modulus();
    if (u % m.p() == 0) return {0.0, 0.0};
    uint64_t v = m.discrete_log(u);
    uint64_t d = chi.order();
    uint64_t t = mulmod(chi.index(), v % d, d);
    double ang = kTwoPi * static_cast<double>(t) / static_cast<double>(d);
    return {std::cos(ang), std::sin(ang)};
}

std::vector<Character> characters_of_order(const PrimeModulus& m, uint64_t d) {
    if (d == 0 || m.q() % d != 0)
        throw std::invalid_argument("characters_of_order: d must divide p-1");
    std::vector<Character> out;
    for (uint64_t k = 1; k <= d; ++k) {
        if (std::gcd(k, d) == 1) out.emplace_back(m, d, k);
    }
    return out;
}

double psi_char_sum(uint64_t u, const PrimeModulus& m) {
    u %= m.p();
    if (u == 0)
        throw std::invalid_argument("psi_char_sum: u is divisible by p");
    uint64_t q = m.q();
    uint64_t v = m.discrete_log(u);

    // Outer weights mu(d)/phi(d) stay rational until each divisor's inner
    // sum is folded in; divisors with mu(d) = 0 contribute nothing.
    std::complex<double> acc{0.0, 0.0};
    for (const auto& sd : squarefree_divisors(m.pm1())) {
        std::complex<double> inner = unit_root_sum(sd.d, v);
        acc += inner * (static_cast<double>(sd.mu) / static_cast<double>(sd.phi));
    }
    double scale = static_cast<double>(euler_phi(m.pm1())) / static_cast<double>(q);
    std::complex<double> value = acc * scale;

    double re = value.real();
    double nearest = re > 0.5 ? 1.0 : 0.0;
    if (std::abs(value.imag()) > kDriftTolerance ||
        std::abs(re - nearest) > kDriftTolerance) {
        throw NumericalDrift("psi_char_sum: value drifted from {0,1} at u = " +
                             std::to_string(u) + ", p = " + std::to_string(m.p()));
    }
    return re;
}

int psi_direct(uint64_t u, const PrimeModulus& m) {
    u %= m.p();
    if (u == 0)
        throw std::invalid_argument("psi_direct: u is divisible by p");
    return multiplicative_order(u, m) == m.q() ? 1 : 0;
}

OrthogonalityCheck character_orthogonality_check(const PrimeModulus& m, uint64_t u) {
    u %= m.p();
    if (u == 0)
        throw std::invalid_argument("character_orthogonality_check: u is divisible by p");
    uint64_t v = m.discrete_log(u);
    uint64_t max_order = euler_phi(m.pm1());

    OrthogonalityCheck chk{};
    for (uint64_t d : divisors(m.pm1())) {
        std::complex<double> s = unit_root_sum(d, v);
        chk.sum_all += s;
        if (d == max_order) chk.sum_max_order = s;
    }
    chk.expected = u == 1 ? static_cast<double>(m.q()) : 0.0;
    if (m.q() >= 2) {
        Character gen(m, m.q(), 1);
        for (uint64_t a = 1; a < max_order; ++a)
            chk.sum_scaled_args += character_eval(gen, mulmod(a, u, m.p()));
    }
    return chk;
}

} // namespace pproot
