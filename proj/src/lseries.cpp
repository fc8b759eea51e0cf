#include "pproot/lseries.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pproot/errors.hpp"

namespace pproot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// -zeta'(2)/zeta(2) = sum_{n>=1} Lambda(n)/n^2.
constexpr double kZetaLogDerivativeAt2 = 0.5699609930945328064;

constexpr double kIdentityTolerance = 1e-9;

void require_s(double s) {
    if (!(s > 1.0))
        throw std::invalid_argument("partial sums require s > 1, got s = " +
                                    std::to_string(s));
}

struct WeightedDivisor {
    uint64_t d;
    double weight;  // mu(d)/phi(d)
};

// Nontrivial squarefree divisors of p-1 with their outer weights.
std::vector<WeightedDivisor> nonprincipal_divisors(const PrimeModulus& m) {
    std::vector<WeightedDivisor> out;
    const auto& fs = m.pm1().factors;
    size_t t = fs.size();
    for (size_t mask = 1; mask < (size_t{1} << t); ++mask) {
        uint64_t d = 1, phi = 1;
        int mu = 1;
        for (size_t i = 0; i < t; ++i) {
            if (mask & (size_t{1} << i)) {
                d *= fs[i].prime;
                phi *= fs[i].prime - 1;
                mu = -mu;
            }
        }
        out.push_back({d, static_cast<double>(mu) / static_cast<double>(phi)});
    }
    return out;
}

// sum over characters of exact order d at discrete log v.
std::complex<long double> order_d_char_sum(uint64_t d, uint64_t v) {
    uint64_t vd = v % d;
    std::complex<long double> acc{0.0L, 0.0L};
    uint64_t t = 0;
    for (uint64_t k = 1; k <= d; ++k) {
        t += vd;
        if (t >= d) t -= d;
        if (std::gcd(k, d) != 1) continue;
        long double ang = static_cast<long double>(kTwoPi) *
                          static_cast<long double>(t) / static_cast<long double>(d);
        acc += std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

} // namespace

double zeta_log_derivative_at_2() { return kZetaLogDerivativeAt2; }

double kappa2(uint64_t p) {
    double pd = static_cast<double>(p);
    return kZetaLogDerivativeAt2 - std::log(pd) / (pd * pd - 1.0);
}

double kappa2(const PrimeModulus& m) { return kappa2(m.p()); }

double weighted_psi_lambda_sum(const PrimeModulus& m, uint64_t x, double s) {
    require_s(s);
    long double acc = 0.0L;
    for (uint64_t n = 2; n <= x; ++n) {
        if (n % m.p() == 0) continue;
        double lam = von_mangoldt(n);
        if (lam == 0.0) continue;
        if (multiplicative_order(n, m) != m.q()) continue;
        acc += static_cast<long double>(lam / std::pow(static_cast<double>(n), s));
    }
    return static_cast<double>(acc);
}

double principal_partial_sum(const PrimeModulus& m, uint64_t x, double s) {
    require_s(s);
    long double acc = 0.0L;
    for (uint64_t n = 2; n <= x; ++n) {
        if (n % m.p() == 0) continue;
        double lam = von_mangoldt(n);
        if (lam == 0.0) continue;
        acc += static_cast<long double>(lam / std::pow(static_cast<double>(n), s));
    }
    return static_cast<double>(acc);
}

double nonprincipal_partial_sum(const PrimeModulus& m, uint64_t x, double s) {
    require_s(s);
    auto ds = nonprincipal_divisors(m);
    std::complex<long double> acc{0.0L, 0.0L};
    for (uint64_t n = 2; n <= x; ++n) {
        if (n % m.p() == 0) continue;
        double lam = von_mangoldt(n);
        if (lam == 0.0) continue;
        uint64_t v = m.discrete_log(n);
        std::complex<long double> inner{0.0L, 0.0L};
        for (const auto& wd : ds) {
            inner += order_d_char_sum(wd.d, v) * static_cast<long double>(wd.weight);
        }
        acc += inner * static_cast<long double>(lam / std::pow(static_cast<double>(n), s));
    }
    if (std::abs(static_cast<double>(acc.imag())) > kDriftTolerance)
        throw NumericalDrift("nonprincipal_partial_sum: imaginary residue " +
                             std::to_string(static_cast<double>(acc.imag())) +
                             " at p = " + std::to_string(m.p()));
    return static_cast<double>(acc.real());
}

PartialSumReport decomposition_check(const PrimeModulus& m, uint64_t x, double s) {
    require_s(s);
    PartialSumReport r;
    r.p = m.p();
    r.x = x;
    r.s = s;
    r.kappa2 = kappa2(m);
    r.tail_estimate = x >= 2 ? std::log(static_cast<double>(x)) / static_cast<double>(x) : 0.0;

    double direct = weighted_psi_lambda_sum(m, x, s);
    double principal = principal_partial_sum(m, x, s);
    double nonprincipal = nonprincipal_partial_sum(m, x, s);
    double scale = static_cast<double>(euler_phi(m.pm1())) / static_cast<double>(m.q());

    r.weighted_total = direct;
    r.principal_part = scale * principal;
    r.nonprincipal_part = scale * nonprincipal;

    double expanded = r.principal_part + r.nonprincipal_part;
    if (std::abs(direct - expanded) > kIdentityTolerance)
        throw DecompositionMismatch(
            "decomposition_check: direct sum " + std::to_string(direct) +
            " vs expansion " + std::to_string(expanded) + " at p = " +
            std::to_string(m.p()) + ", x = " + std::to_string(x));
    return r;
}

std::complex<double> chebyshev_psi_chi(const Character& chi, uint64_t x) {
    const PrimeModulus& m = chi.modulus();
    std::complex<long double> acc{0.0L, 0.0L};
    for (uint64_t n = 2; n <= x; ++n) {
        if (n % m.p() == 0) continue;
        double lam = von_mangoldt(n);
        if (lam == 0.0) continue;
        std::complex<double> c = character_eval(chi, n);
        acc += std::complex<long double>(c.real() * lam, c.imag() * lam);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

} // namespace pproot
