#pragma once

// Vertical-line inverse Mellin transforms of Φ = γF and the contour-shift
// functional-equation residual.

#include "selberg/lfunc.hpp"

namespace selberg::lfunc {

struct ContourConfig {
    double c = 2.0;       // abscissa of the integration line
    double step = 0.05;   // trapezoid step in t
    double tail_decay = 0.5;  // required |γ(c+i(T+1))| / |γ(c+iT)| at the cut
};

struct MellinResult {
    cplx value;
    std::size_t terms;  // Dirichlet-polynomial length used for F
    double height;      // truncation T
    double error_bound; // coefficient tail + height tail
};

/// S_F(x) = (1/2πi) ∫_{(c)} Φ(s) x^{-s} ds. F is replaced by its Dirichlet
/// polynomial of length N, with N chosen from |W(y)| <= y^{-c'} G(c') so that
/// the dropped terms are below acc.abs_tol. Throws AccuracyError for d = 0.
MellinResult inverse_mellin_phi(const SelbergFunction& F, double x, const Accuracy& acc,
                                const ContourConfig& cfg = {});

/// W(y) = (1/2πi) ∫_{(c)} γ(s) y^{-s} ds, by the same quadrature.
cplx gamma_kernel(const GammaFactor& g, double y, const Accuracy& acc, double c = 1.5, double step = 0.1);

/// Σ a_n W(n x) with W evaluated term by term (second route to S_F).
cplx theta_series(const SelbergFunction& F, double x, const Accuracy& acc);

/// S_F(x) - R(x) - x^{-1} S_{F̄}(1/x). R(x) = γ(1)ρ/x - conj(γ(1)ρ) when
/// m = 1, 0 when m = 0.
cplx fe_residual(const SelbergFunction& F, double x, const Accuracy& acc, const ContourConfig& cfg = {});

/// R(x) above.
cplx residue_term(const SelbergFunction& F, double x);

namespace reference {
/// Same quadrature as inverse_mellin_phi, without the OpenMP node loop.
MellinResult inverse_mellin_phi_serial(const SelbergFunction& F, double x, const Accuracy& acc,
                                       const ContourConfig& cfg = {});
}  // namespace reference

}  // namespace selberg::lfunc
