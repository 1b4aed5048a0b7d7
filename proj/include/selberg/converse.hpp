#pragma once

// GL(2) converse machinery: the Bessel series
//   f(x, y) = y^{1/2} Σ a_n H_α(2πnx/√q) K_β(2πny/√q),  H_α(t) = t^{1/2} J_α(t),
// its r -> 1/r symmetry, the Mellin identities behind it, and the
// holomorphic (Δ) reductions.

#include <cstddef>
#include <vector>

#include "selberg/accuracy.hpp"
#include "selberg/lfunc.hpp"
#include "selberg/specfun.hpp"

namespace selberg::converse {

struct GL2Params {
    double alpha = 0.5;
    cplx beta{0.5, 0.0};  // real or purely imaginary
    double q = 1.0;
    std::vector<cplx> a;  // a[0] unused
    lfunc::RamanujanBound bound;
    /// a_n = 0 beyond the stored range (Φ is then an explicit finite sum).
    bool finite = false;
    /// Below this y the series is not certified.
    double y_min = 1e-3;

    std::size_t N() const { return a.empty() ? 0 : a.size() - 1; }
    void validate() const;

    /// α = 11/2, β = 1/2, q = 1, a_n = τ(n)/n^{11/2}.
    static GL2Params delta(std::size_t N);
    /// a = (1, 0, 0, ...), finite.
    static GL2Params single(double alpha, cplx beta, double q = 1.0);
};

struct FxyResult {
    cplx value;
    std::size_t terms;
    double tail_bound;
};

/// Truncated series with the tail bounded through |H_α(t)| <= (1 + t)^{1/2},
/// |K_β(y)| <= K_{|Re β|}(y) and the monotone decay of e^y K_ν(y).
FxyResult f_xy(const GL2Params& P, double x, double y, const Accuracy& acc);

/// Exactly the first N terms (no certification).
cplx f_xy_terms(const GL2Params& P, double x, double y, std::size_t N);

struct SymmetryPoint {
    double r, theta;
    cplx lhs;  // f(r e^{iθ})
    cplx rhs;  // conj f(r^{-1} e^{iθ})
    double residual;
    std::size_t terms_lhs, terms_rhs;
};

struct SymmetryReport {
    std::vector<SymmetryPoint> points;
    double max_residual = 0.0;
};

SymmetryPoint symmetry_residual(const GL2Params& P, double r, double theta, const Accuracy& acc);

/// Grid sweep; points evaluated as an OpenMP loop.
SymmetryReport symmetry_sweep(const GL2Params& P, const std::vector<double>& rs, const std::vector<double>& thetas,
                              const Accuracy& acc);

namespace reference {
SymmetryReport symmetry_sweep_serial(const GL2Params& P, const std::vector<double>& rs,
                                     const std::vector<double>& thetas, const Accuracy& acc);
}

struct Comparison {
    cplx lhs, rhs;
    double diff;  // |lhs - rhs|
    double rel() const { return diff / std::max(std::abs(rhs), 1e-300); }
};

/// ∫_0^∞ J_α(au) K_β(bu) u^{s-1} du by quadrature (left) against the
/// Gamma-2F1 closed form (right).
Comparison mellin_pair_check(double alpha, cplx beta, double a, double b, cplx s, const Accuracy& acc);

cplx mellin_pair_closed(double alpha, cplx beta, double a, double b, cplx s);

/// T(s) = (sin θ)^{-s} 2F1((s+α+β+1/2)/2, (s+α-β+1/2)/2; α+1; -cot²θ).
cplx t_function(double alpha, cplx beta, double theta, cplx s);

/// lhs = T(s), rhs = T(1 - s).
Comparison t_symmetry_check(double alpha, cplx beta, double theta, cplx s);

/// Φ(s) = (√q/π)^s Γ((α+β+1/2+s)/2) Γ((α-β+1/2+s)/2) F(s). Finite
/// coefficient lists and Re s > 1 + ε' are summed directly. Elsewhere Φ is
/// taken from ∫_1^∞ S(x) x^{s-1} dx + ∫_1^∞ S̄(x) x^{-s} dx with
/// S(x) = Σ a_n W(nx), which presumes the functional equation.
cplx gl2_phi(const GL2Params& P, cplx s, const Accuracy& acc);

/// W(y) = 4 (πy/√q)^{α+1/2} K_β(2πy/√q), the inverse Mellin transform of the
/// gamma part of Φ.
cplx gl2_kernel(const GL2Params& P, double y);

/// lhs = ∫_0^∞ f(r e^{iθ}) r^{s-1/2} dr/r by trapezoid in log r,
/// rhs = 2^{-3/2} (cos θ)^{1/2} (cot θ)^α Γ(1+α)^{-1} T(s) Φ(s).
Comparison mellin_M_check(const GL2Params& P, double theta, cplx s, const Accuracy& acc);

/// (π/2)^{1/2} x^{1/2} J_{11/2}(x) as the explicit trigonometric polynomial in 1/x.
double j112_closed_form(double x);

/// lhs = closed form, rhs = (π/2)^{1/2} x^{1/2} bessel_j(11/2, x).
Comparison j_closed_form_check(double x);

struct TransformCheck {
    double lhs, rhs, diff;
    double rel() const { return diff / std::max(std::abs(rhs), 1e-300); }
};

/// Δ(iy) = Σ τ(n) e^{-2πny} against y^{-12} Δ(i/y).
TransformCheck delta_transform_check(double y, const Accuracy& acc);

/// Δ(iy) by its q-series; the tail Σ 2 n^6 e^{-2πny} (|τ(n)| <= d(n) n^{11/2})
/// must fall below max(abs_tol, rel_tol |partial sum| / 2).
double delta_on_imaginary_axis(double y, const Accuracy& acc);

/// g(y) = Σ a_n n^{(k-1)/2} e^{-2πny/√q}; lhs = g(1/y), rhs = y^k g(y).
/// Requires β = 1/2 and α = (k-1)/2.
TransformCheck g_series_check(const GL2Params& P, int k, double y, const Accuracy& acc);

double g_series(const GL2Params& P, int k, double y, const Accuracy& acc);

/// |5-point Laplacian of f - ((α²-1/4)/x² + (β²-1/4)/y²) f| at step h.
double pde_residual(const GL2Params& P, double x, double y, double h, const Accuracy& acc);

}  // namespace selberg::converse
