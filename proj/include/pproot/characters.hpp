#pragma once

// Multiplicative structure mod p: orders, discrete logarithms, Dirichlet
// characters, primitive-root and nonresidue searches, and the
// characteristic function Psi of primitive roots.

#include <complex>
#include <cstdint>
#include <vector>

#include "pproot/arith.hpp"

namespace pproot {

// Integrality / realness tolerance for character-sum evaluations.
inline constexpr double kDriftTolerance = 1e-9;

// A certified prime p bundled with the factorization of p-1 and the least
// primitive root tau. Immutable after construction and safe to share
// across threads. For p below kLogTableLimit a full discrete-log table is
// built once at construction; larger moduli fall back to baby-step
// giant-step per query.
class PrimeModulus {
  public:
    static constexpr uint64_t kLogTableLimit = 1u << 20;

    // Certifies primality; throws std::invalid_argument otherwise.
    explicit PrimeModulus(uint64_t p);

    uint64_t p() const { return p_; }
    uint64_t q() const { return p_ - 1; }  // group order
    const FactoredInteger& pm1() const { return pm1_; }
    uint64_t tau() const { return tau_; }
    bool has_log_table() const { return !log_.empty(); }

    // v with tau^v = u (mod p), 0 <= v < p-1. Rejects u = 0 (mod p).
    uint64_t discrete_log(uint64_t u) const;

  private:
    uint64_t p_;
    uint64_t tau_;
    FactoredInteger pm1_;
    std::vector<uint32_t> log_;  // log_[u] for 1 <= u < p, when built
};

// Exact order of u in (Z/pZ)*, by stripping prime factors of p-1.
uint64_t multiplicative_order(uint64_t u, const PrimeModulus& m);
uint64_t multiplicative_order(uint64_t u, uint64_t p, const FactoredInteger& pm1);

// u^((p-1)/r) != 1 for every prime r | p-1.
bool is_primitive_root(uint64_t u, uint64_t p, const FactoredInteger& pm1);

// g(p): smallest g >= 2 generating (Z/pZ)*. p >= 3 prime.
uint64_t least_primitive_root(uint64_t p);
uint64_t least_primitive_root(uint64_t p, const FactoredInteger& pm1);

// g*(p): smallest prime q whose residue generates (Z/pZ)*. A cap of 0
// selects the default max(10^6, p); exceeding the cap throws
// SearchCapExceeded.
uint64_t least_prime_primitive_root(uint64_t p, uint64_t cap = 0);
uint64_t least_prime_primitive_root(uint64_t p, const FactoredInteger& pm1,
                                    uint64_t cap);

// n(p): smallest n >= 2 with (n/p) = -1, via Euler's criterion.
uint64_t least_quadratic_nonresidue(uint64_t p);

// (a/p) in {-1, 0, 1} for odd prime p.
int legendre_symbol(int64_t a, uint64_t p);

// A Dirichlet character mod p of exact order d, represented by
// (tau, d, index k) with gcd(k, d) = 1; evaluation goes through the
// discrete log. The modulus must outlive the character.
class Character {
  public:
    Character(const PrimeModulus& m, uint64_t order, uint64_t index);

    const PrimeModulus& modulus() const { return *mod_; }
    uint64_t order() const { return order_; }
    uint64_t index() const { return index_; }
    bool principal() const { return order_ == 1; }

  private:
    const PrimeModulus* mod_;
    uint64_t order_;
    uint64_t index_;
};

// chi(u) = e^(2 pi i k log(u) / d), 0 on multiples of p.
std::complex<double> character_eval(const Character& chi, uint64_t u);

// The phi(d) characters of exact order d; d must divide p-1.
std::vector<Character> characters_of_order(const PrimeModulus& m, uint64_t d);

// Indicator of primitive roots via the Moebius-weighted character double
// sum. Must land within kDriftTolerance of {0, 1}; throws NumericalDrift
// otherwise. Requires gcd(u, p) = 1.
double psi_char_sum(uint64_t u, const PrimeModulus& m);

// Indicator of primitive roots by the exact order test. The oracle
// psi_char_sum is checked against.
int psi_direct(uint64_t u, const PrimeModulus& m);

struct OrthogonalityCheck {
    std::complex<double> sum_all;          // sum of chi(u) over all p-1 characters
    double expected;                       // p-1 if u = 1 (mod p), else 0
    std::complex<double> sum_max_order;    // diagnostic: restricted to ord(chi) = phi(p-1)
    std::complex<double> sum_scaled_args;  // diagnostic: sum_{1<=a<phi(p-1)} chi(a u),
                                           // chi the order-(p-1) generator character
};

// Full-character-group orthogonality at u. The two diagnostic fields are
// recorded variants only, never asserted: neither the sum restricted to
// characters of order exactly phi(p-1) nor the scaled-argument sum is an
// orthogonality identity.
OrthogonalityCheck character_orthogonality_check(const PrimeModulus& m, uint64_t u);

} // namespace pproot
