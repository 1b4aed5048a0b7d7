#include "selberg/contour.hpp"
#include "selberg/parallel.hpp"

#include <array>
#include <limits>
#include <cmath>
#include <sstream>

namespace selberg::lfunc {

namespace {

double abs_gamma(const GammaFactor& g, double c, double t) {
    return std::exp(log_gamma_factor(g, cplx(c, t)).real());
}

struct Height {
    double T;
    double tail;  // bound on ∫_{|t|>T} |γ(c+it)| dt
};

// Smallest integer height where |γ| has dropped below `threshold` on both
// sides and is decaying geometrically (ratio <= decay per unit step).
Height find_height(const GammaFactor& g, double c, double threshold, double decay) {
    if (g.factors.empty()) throw AccuracyError("vertical-line quadrature: degree 0 gamma factor has no decay");
    for (double T = 1.0; T < 1e5; T += 1.0) {
        const double up = abs_gamma(g, c, T), dn = abs_gamma(g, c, -T);
        if (up > threshold || dn > threshold) continue;
        const double ru = abs_gamma(g, c, T + 1.0) / up;
        const double rd = abs_gamma(g, c, -T - 1.0) / dn;
        if (ru > decay || rd > decay) continue;
        return {T, up / (1.0 - ru) + dn / (1.0 - rd)};
    }
    throw AccuracyError("vertical-line quadrature: no truncation height found");
}

// (1/2π) ∫ |γ(c+it)| dt, rounded up.
double envelope_G(const GammaFactor& g, double c) {
    const Height H = find_height(g, c, 1e-30 * abs_gamma(g, c, 0.0), 0.7);
    const double h = 0.05;
    double sum = 0.0;
    for (double t = -H.T; t <= H.T + 1e-12; t += h) sum += abs_gamma(g, c, t);
    return 1.05 * (sum * h + H.tail) / (2.0 * kPi);
}

// Length of the Dirichlet polynomial so that Σ_{n>N} |a_n W(nx)| < budget.
std::size_t certified_length(const SelbergFunction& F, double x, double budget, std::size_t max_terms) {
    if (F.finite) return F.N();
    const double e = F.bound.exponent;
    double best = std::numeric_limits<double>::infinity();
    for (double cp : {2.0, 3.0, 4.0, 6.0, 8.0, 12.0, 16.0, 24.0, 32.0}) {
        if (cp <= 1.0 + e + 0.05) continue;
        const double G = envelope_G(*F.gamma, cp);
        const double k = cp - 1.0 - e;
        // C x^{-c'} G N^{-k} / k <= budget
        const double logN = (std::log(F.bound.C * G / k) - cp * std::log(x) - std::log(budget)) / k;
        best = std::min(best, std::ceil(std::exp(std::max(0.0, logN))));
    }
    if (!(best <= static_cast<double>(std::min(max_terms, F.N())))) {
        std::ostringstream os;
        os << F.name << ": inverse Mellin at x = " << x << " needs " << best << " coefficients, "
           << std::min(max_terms, F.N()) << " available";
        throw AccuracyError(os.str());
    }
    return static_cast<std::size_t>(std::max(1.0, best));
}

MellinResult mellin_impl(const SelbergFunction& F, double x, const Accuracy& acc, const ContourConfig& cfg,
                         bool parallel) {
    acc.validate();
    if (!(x > 0.0)) throw DomainError("inverse_mellin_phi: x must be positive");
    if (!F.gamma) throw DomainError(F.name + ": gamma factor unknown");
    if (F.gamma->factors.empty())
        throw AccuracyError(F.name + ": degree 0, the vertical-line integral does not converge");
    const GammaFactor& g = *F.gamma;
    const double c = cfg.c;
    if (c <= 1.0 + F.bound.exponent) throw DomainError("inverse_mellin_phi: line must lie in absolute convergence");

    const std::size_t N = certified_length(F, x, 0.5 * acc.abs_tol, acc.max_terms);
    std::vector<double> logs(N + 1, 0.0);
    double A = 0.0;  // Σ |a_n| (n x)^{-c}
    for (std::size_t n = 1; n <= N; ++n) {
        logs[n] = std::log(static_cast<double>(n) * x);
        A += std::abs(F.a[n]) * std::exp(-c * logs[n]);
    }
    double scale = std::max(A, 1e-300) / (2.0 * kPi);
    const Height H = find_height(g, c, 0.25 * acc.abs_tol / scale, cfg.tail_decay);

    const auto K = static_cast<std::int64_t>(std::ceil(H.T / cfg.step));
    auto node = [&](std::int64_t k) {
        const cplx s(c, static_cast<double>(k) * cfg.step);
        const cplx lg = log_gamma_factor(g, s);
        cplx sum = 0.0;
        for (std::size_t n = 1; n <= N; ++n)
            if (F.a[n] != 0.0) sum += F.a[n] * std::exp(lg - s * logs[n]);
        return sum;
    };
    cplx total = 0.0;
    if (parallel) {
        total = ordered_parallel_sum(-K, K, node);
    } else {
        for (std::int64_t k = -K; k <= K; ++k) total += node(k);
    }
    const cplx value = total * (cfg.step / (2.0 * kPi));
    return {value, N, H.T, 0.5 * acc.abs_tol + scale * H.tail};
}

}  // namespace

MellinResult inverse_mellin_phi(const SelbergFunction& F, double x, const Accuracy& acc, const ContourConfig& cfg) {
    return mellin_impl(F, x, acc, cfg, true);
}

namespace reference {
MellinResult inverse_mellin_phi_serial(const SelbergFunction& F, double x, const Accuracy& acc,
                                       const ContourConfig& cfg) {
    return mellin_impl(F, x, acc, cfg, false);
}
}  // namespace reference

cplx gamma_kernel(const GammaFactor& g, double y, const Accuracy& acc, double c, double step) {
    if (!(y > 0.0)) throw DomainError("gamma_kernel: y must be positive");
    const double scale = std::exp(-c * std::log(y)) / (2.0 * kPi);
    const Height H = find_height(g, c, 0.25 * acc.abs_tol / scale, 0.5);
    const auto K = static_cast<std::int64_t>(std::ceil(H.T / step));
    cplx sum = 0.0;
    const double ly = std::log(y);
    for (std::int64_t k = -K; k <= K; ++k) {
        const cplx s(c, static_cast<double>(k) * step);
        sum += std::exp(log_gamma_factor(g, s) - s * ly);
    }
    return sum * (step / (2.0 * kPi));
}

cplx theta_series(const SelbergFunction& F, double x, const Accuracy& acc) {
    if (!F.gamma) throw DomainError(F.name + ": gamma factor unknown");
    const std::size_t N = certified_length(F, x, 0.5 * acc.abs_tol, acc.max_terms);
    cplx sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n)
        if (F.a[n] != 0.0) sum += F.a[n] * gamma_kernel(*F.gamma, static_cast<double>(n) * x, acc.with_abs(0.5 * acc.abs_tol / N));
    return sum;
}

cplx residue_term(const SelbergFunction& F, double x) {
    if (F.pole_order == 0) return 0.0;
    if (F.pole_order > 1) throw DomainError(F.name + ": residue term supports pole order <= 1");
    if (!F.residue) throw DomainError(F.name + ": residue at s = 1 not supplied");
    const cplx v = std::exp(log_gamma_factor(*F.gamma, 1.0)) * *F.residue;
    return v / x - std::conj(v);
}

cplx fe_residual(const SelbergFunction& F, double x, const Accuracy& acc, const ContourConfig& cfg) {
    if (F.pole_order > 1) throw DomainError(F.name + ": fe_residual supports pole order 0 or 1");
    const SelbergFunction Fbar = conjugate(F);
    const cplx left = inverse_mellin_phi(F, x, acc, cfg).value;
    const cplx right = inverse_mellin_phi(Fbar, 1.0 / x, acc, cfg).value / x;
    return left - residue_term(F, x) - right;
}

}  // namespace selberg::lfunc
