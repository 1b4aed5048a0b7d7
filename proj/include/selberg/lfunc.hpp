#pragma once

// Selberg-class candidates: coefficients, gamma factors, Euler data and the
// checks that tie them together.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selberg/accuracy.hpp"
#include "selberg/characters.hpp"

namespace selberg::lfunc {

struct GammaTerm {
    double w;  // > 0
    cplx mu;   // Re mu >= 0
};

/// γ(s) = ε Q^s Π Γ(w_i s + μ_i).
struct GammaFactor {
    cplx epsilon{1.0, 0.0};
    double Q = 1.0;
    std::vector<GammaTerm> factors;

    /// Throws DomainError on |ε| != 1, Q <= 0, w <= 0 or Re μ < 0.
    void validate() const;
    GammaFactor conj() const;
};

double degree(const GammaFactor& g);

/// log γ(s); throws PoleError when some w s + μ is a non-positive integer.
cplx log_gamma_factor(const GammaFactor& g, cplx s);

struct SStarData {
    int d = 0;
    double q = 1.0;
    std::vector<cplx> mus;
    cplx eps_squared{1.0, 0.0};
};

/// Rewrites every Γ(k s/2 + μ) as a product of k factors Γ(s/2 + ·) using
/// Gauss' multiplication formula. Throws DomainError when some w is not a
/// positive multiple of 1/2.
SStarData normalize_to_sstar(const GammaFactor& g);

/// The same normalisation, kept as a gamma factor (all w = 1/2).
GammaFactor normalized_gamma(const GammaFactor& g);

struct ConductorValue {
    double q;
    bool integral;  // within 1e-9 of a positive integer
};

ConductorValue conductor(const SStarData& s);

/// F_p(x) with x = p^{-s}: P(x) if !inverse, 1 / P(x) if inverse.
/// coeffs holds A_0..A_r with A_0 = 1.
struct LocalPoly {
    std::vector<cplx> coeffs;
    bool inverse = true;
};

/// |a_n| <= C n^exponent.
struct RamanujanBound {
    double C = 1.0;
    double exponent = 0.0;
};

enum class Builtin { Zeta, Dirichlet, Delta };

using LocalFactorFn = std::function<std::optional<LocalPoly>(std::uint64_t p)>;

/// Immutable; coefficients are realized eagerly up to N.
class SelbergFunction {
public:
    std::string name;
    std::vector<cplx> a;  // a[0] unused, a[1..N]
    /// true when a_n = 0 beyond N (explicit Dirichlet polynomials).
    bool finite = false;
    std::optional<GammaFactor> gamma;
    int pole_order = 0;
    std::optional<cplx> residue;
    double theta_bound = 0.0;
    RamanujanBound bound;
    /// Exact local factors where known; empty means reconstruct from a_{p^k}.
    LocalFactorFn local;

    std::size_t N() const { return a.empty() ? 0 : a.size() - 1; }
    cplx coeff(std::uint64_t n) const;

    /// Checks the structural invariants (θ < 1/2, m >= 0, gamma validity).
    void validate() const;
};

SelbergFunction make_zeta(std::size_t N);
SelbergFunction make_dirichlet(const chars::DirichletCharacter& chi, std::size_t N);
/// Normalized Δ: a_n = τ(n)/n^{11/2}, γ = (2π)^{-s} Γ(s + 11/2).
SelbergFunction make_delta(std::size_t N);
SelbergFunction make_builtin(Builtin tag, std::size_t N, const chars::DirichletCharacter* chi = nullptr);

/// Explicit list a_1..a_N (finite Dirichlet polynomial).
SelbergFunction make_explicit(std::vector<cplx> a_1_to_N, std::optional<GammaFactor> gamma, int pole_order = 0,
                              std::optional<cplx> residue = std::nullopt);

enum class EulerDefault { Zeta, One };

/// Euler product from per-prime local polynomials; primes not listed use
/// (1 - p^{-s})^{-1} (Zeta) or 1 (One).
SelbergFunction make_euler(const std::map<std::uint64_t, LocalPoly>& factors, EulerDefault fallback, std::size_t N,
                           std::optional<GammaFactor> gamma, int pole_order = 0,
                           std::optional<cplx> residue = std::nullopt);

/// a_1..a_N for a builtin tag.
std::vector<cplx> builtin_coefficients(Builtin tag, std::size_t N, const chars::DirichletCharacter* chi = nullptr);

/// Coefficient-wise conjugate: F̄ with conjugated a_n, ε, μ and residue.
SelbergFunction conjugate(const SelbergFunction& F);

/// a_n χ(n); the gamma factor is left unknown.
SelbergFunction twist(const SelbergFunction& F, const chars::DirichletCharacter& chi);

/// Dirichlet convolution, truncated at min(N_F, N_G); gamma data concatenated.
SelbergFunction product(const SelbergFunction& F, const SelbergFunction& G);

struct MultiplicativityReport {
    std::size_t pairs_checked = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> violations;  // m < n, coprime, mn <= N
    bool ok() const { return violations.empty(); }
};

/// a_{mn} = a_m a_n for coprime 2 <= m < n with mn <= N.
MultiplicativityReport multiplicativity_check(const std::vector<cplx>& a, std::size_t N, double tol = 1e-10);

/// Coefficients L_1..L_J of log P(x) for P = A_0 + A_1 x + ... (A_0 = 1).
std::vector<cplx> formal_log(const std::vector<cplx>& P, int J);

/// b_{p^j}, j = 1..J. Uses the exact local factor when available, otherwise
/// reconstructs F_p from a_{p^k}, p^k <= N; throws NotFoundError when that
/// leaves fewer than 3 terms or fewer than J.
std::vector<cplx> euler_log_coeffs(const SelbergFunction& F, std::uint64_t p, int J);

struct EvalResult {
    cplx value;
    double tail_bound;
    std::size_t terms;
};

/// Σ a_n n^{-s} with a certified tail C Σ_{n>M} n^{ε'-σ} < acc.abs_tol.
/// Requires σ >= 1 + ε' + delta.
EvalResult dirichlet_eval(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta = 1e-3);

namespace reference {
EvalResult dirichlet_eval_serial(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta = 1e-3);
}

/// γ(s) F(s), assembled in log space for γ.
cplx completed_phi(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta = 1e-3);

struct TrivialZero {
    cplx location;
    int order;
};

/// Poles of γ with real part in [lo, hi], merged; the multiplicity at s = 0
/// is reduced by the pole order m.
std::vector<TrivialZero> trivial_zeros(const GammaFactor& g, int pole_order, double lo, double hi);

struct AuditItem {
    std::string axiom;
    bool passed;
    std::string detail;
};

struct AuditReport {
    std::vector<AuditItem> items;
    double degree = -1.0;  // -1 when the gamma factor is unknown
    bool primitive_by_degree = false;
    bool passed() const;
};

struct AuditConfig {
    std::uint64_t max_prime = 100;
    int J = 60;  // log coefficients per prime when the local factor is exact
};

AuditReport axiom_audit(const SelbergFunction& F, const AuditConfig& cfg = {});

}  // namespace selberg::lfunc
