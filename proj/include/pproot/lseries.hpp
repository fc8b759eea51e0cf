#pragma once

// Truncated Dirichlet-series numerics: weighted sums of the primitive-root
// indicator against Lambda(n)/n^s, their principal/nonprincipal split, and
// the constant kappa2(p).

#include <complex>
#include <cstdint>

#include "pproot/characters.hpp"

namespace pproot {

// Value and decomposition of a truncated weighted sum at (p, x, s).
// principal_part and nonprincipal_part carry the phi(p-1)/(p-1) scale so
// that weighted_total == principal_part + nonprincipal_part holds exactly
// as a finite-sum identity; the unscaled sums are available through
// principal_partial_sum / nonprincipal_partial_sum.
struct PartialSumReport {
    uint64_t p = 0;
    uint64_t x = 0;
    double s = 0.0;
    double weighted_total = 0.0;     // sum_{n<=x} Psi(n) Lambda(n) / n^s
    double principal_part = 0.0;
    double nonprincipal_part = 0.0;
    double kappa2 = 0.0;
    double tail_estimate = 0.0;      // log x / x, the truncation scale at s = 2
};

// sum_{n<=x, p∤n} Psi(n) Lambda(n) / n^s with Psi the exact order test.
// Requires s > 1; x < 2 gives the empty sum.
double weighted_psi_lambda_sum(const PrimeModulus& m, uint64_t x, double s);

// -zeta'(2)/zeta(2), correct to at least 15 digits.
double zeta_log_derivative_at_2();

// kappa2(p) = -zeta'(2)/zeta(2) - log p / (p^2 - 1): the limit of the
// principal partial sum at s = 2, with the geometric p-power correction
// summed in closed form.
double kappa2(const PrimeModulus& m);
double kappa2(uint64_t p);

// sum_{n<=x} Lambda(n) chi0(n) / n^s (multiples of p excluded).
double principal_partial_sum(const PrimeModulus& m, uint64_t x, double s);

// sum_{n<=x} Lambda(n)/n^s * sum_{1<d|p-1} mu(d)/phi(d) sum_{ord(chi)=d} chi(n),
// real part; the phi(p-1)/(p-1) outer factor is NOT included. Throws
// NumericalDrift if the imaginary residue exceeds tolerance.
double nonprincipal_partial_sum(const PrimeModulus& m, uint64_t x, double s);

// Evaluates the weighted sum directly and through the character
// decomposition, asserts agreement to 1e-9 (else DecompositionMismatch),
// and packages the result.
PartialSumReport decomposition_check(const PrimeModulus& m, uint64_t x, double s);

// psi_chi(x) = sum_{n<=x} chi(n) Lambda(n).
std::complex<double> chebyshev_psi_chi(const Character& chi, uint64_t x);

} // namespace pproot
