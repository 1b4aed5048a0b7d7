#pragma once

// Special-function kernel: complex log-gamma, Bessel J_alpha (real order,
// real argument), Bessel K_beta (real or imaginary order, real argument) and
// the Gauss hypergeometric function 2F1 on the negative real axis.
//
// Every routine either meets its Accuracy contract or throws; none returns a
// silently degraded value.

#include "selberg/accuracy.hpp"

namespace selberg::specfun {

/// Default contract for the kernel: effectively relative-only.
inline Accuracy default_accuracy() { return Accuracy{1e-300, 1e-13, 200'000}; }

/// Principal branch of log Γ(z). Lanczos (g = 7, 9 terms) for Re z >= 1/2,
/// reflection below. Throws PoleError at z = 0, -1, -2, ...
cplx log_gamma(cplx z);

inline cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

/// log|Γ(x)| for real x (not a non-positive integer).
double log_abs_gamma(double x);

/// log sin(πz) modulo 2πi, stable for large |Im z|.
cplx log_sin_pi(cplx z);

/// Regime switches for bessel_j. The power series is used for x below
/// series_limit; the Hankel expansion is tried for x >= max(asymptotic_min,
/// 2α²) and accepted only if its truncation estimate meets the tolerance.
/// Everything else goes through Steed's continued fractions with
/// downward recurrence in the order.
struct BesselJConfig {
    double series_limit = 2.0;
    double asymptotic_min = 12.0;
};

enum class BesselJRegime { Series, Asymptotic, ContinuedFraction };

/// J_alpha(x) for alpha >= -1/2, x > 0.
double bessel_j(double alpha, double x, const Accuracy& acc = default_accuracy(),
                const BesselJConfig& cfg = {});

/// Which regime bessel_j will use (exposed for tests).
BesselJRegime bessel_j_regime(double alpha, double x, const Accuracy& acc = default_accuracy(),
                              const BesselJConfig& cfg = {});

/// Series-only evaluation; throws AccuracyError when cancellation defeats it.
double bessel_j_series(double alpha, double x, const Accuracy& acc = default_accuracy());

/// H_alpha(x) = x^{1/2} J_alpha(x).
inline double bessel_h(double alpha, double x, const Accuracy& acc = default_accuracy()) {
    return std::sqrt(x) * bessel_j(alpha, x, acc);
}

struct BesselKConfig {
    /// Integrand tail cut: drop t once the log-envelope is this far below its peak.
    double log_cutoff = 40.0;
    /// Below this argument the kernel refuses (overflow guard for large orders).
    double y_min = 1e-10;
    int max_refinements = 14;
};

/// e^{y} K_beta(y), from the trapezoid rule on ∫_0^∞ e^{-y cosh t} cosh(βt) dt.
/// beta is expected real or purely imaginary; general complex beta is accepted.
cplx bessel_k_scaled(cplx beta, double y, const Accuracy& acc = default_accuracy(),
                     const BesselKConfig& cfg = {});

inline cplx bessel_k(cplx beta, double y, const Accuracy& acc = default_accuracy(),
                     const BesselKConfig& cfg = {}) {
    return bessel_k_scaled(beta, y, acc, cfg) * std::exp(-y);
}

/// 2F1(a, b; c; x) for real x <= 0. Direct series for x > -1/2, Pfaff
/// transformation (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)) otherwise.
cplx hyp2f1(cplx a, cplx b, cplx c, double x, const Accuracy& acc = default_accuracy());

/// Bare hypergeometric series in z, |z| < 1. Exposed for oracles.
cplx hyp2f1_series(cplx a, cplx b, cplx c, double z, const Accuracy& acc = default_accuracy());

}  // namespace selberg::specfun
