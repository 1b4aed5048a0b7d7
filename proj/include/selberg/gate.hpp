#pragma once

// Degree gate: the growth of the K(x) coefficients γ(n+1)/(γ(-n) n!) that
// rules out 0 < d < 1, and the Euler-factor root analysis that rules out
// d = 0 through θ < 1/2.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "selberg/lfunc.hpp"

namespace selberg::gate {

struct DecayProfile {
    std::vector<int> n;
    std::vector<double> log_ratio;  // -inf where excluded
    std::vector<std::string> reason;  // empty for finite entries
};

/// log|γ(n+1) F(n+1) / (γ(-n) n!)| for n = 0..N. F_at(s) supplies F at
/// s = n + 1; a PoleError from it or from γ(-n) excludes that n.
DecayProfile k_decay_profile(const lfunc::GammaFactor& g, const std::function<cplx(int)>& F_at, int N);

/// Same with F ≡ 1.
DecayProfile k_decay_profile(const lfunc::GammaFactor& g, int N);

/// Coefficient of n log n in a least-squares fit of log|ratio| on
/// {n log n, n, 1} over the largest third of the finite entries (≈ d - 1).
/// Requires 20 finite entries.
double decay_exponent(const DecayProfile& profile);

struct LocalFactor {
    std::uint64_t p = 0;
    std::vector<cplx> coeffs;  // A_0..A_r, A_0 = 1, trailing zeros trimmed
    std::vector<cplx> roots;   // inverse roots: P(x) = Π (1 - R_i x)
    double residual = 0.0;     // max coefficient mismatch after reconstruction
};

struct RootConfig {
    int max_iterations = 2000;
    int restarts = 8;
    std::uint64_t seed = 20240611;
};

/// Durand-Kerner on y^r + A_1 y^{r-1} + ... + A_r with Newton polishing and
/// seeded random restarts. Throws AccuracyError if the reconstruction
/// residual stays above 1e-10.
LocalFactor local_roots(const std::vector<cplx>& coeffs, std::uint64_t p = 0, const RootConfig& cfg = {});

/// Coefficients of Π (1 - R_i x).
std::vector<cplx> expand_roots(const std::vector<cplx>& roots);

struct BjGrowth {
    std::vector<cplx> B;            // B_j = -Σ R_i^j / j, j = 1..J (may overflow to inf for huge |R|)
    std::vector<double> root_seq;   // |B_j|^{1/j}
    std::vector<double> corrected;  // |j B_j|^{1/j}, same limit, no j^{-1/j} bias
    double limsup_raw;              // max of root_seq over the final 10%
    double limsup;                  // max of corrected over the final 10%
    double max_modulus;
    bool dominant;  // a single root of maximal modulus (ties within 1e-9 relative)
};

BjGrowth bj_growth(const LocalFactor& f, int J);

struct ThetaVerdict {
    double theta;  // log_p max|R_i|
    bool admissible;  // theta < 1/2
};

ThetaVerdict theta_requirement(const LocalFactor& f, std::uint64_t p);

struct DegreeZeroReport {
    bool q_squared_integral = false;
    std::uint64_t q_squared = 0;
    std::vector<std::uint64_t> support_violations;  // n with a_n != 0 and n ∤ Q²
    bool leading_modulus_ok = false;               // |a_{Q²}| = Q
    cplx eps_star{0.0, 0.0};
    std::vector<std::uint64_t> matching_violations;  // m | Q² with a_{Q²/m} != ε* Q ā_m / m
    struct PrimeCheck {
        std::uint64_t p;
        int r;
        double a_pr_modulus;
        ThetaVerdict verdict;
    };
    std::vector<PrimeCheck> prime_checks;
    bool consistent = false;  // all structural identities hold
    bool accepted = false;    // consistent and every θ admissible
    std::vector<std::string> notes;
};

/// Degree-0 candidate F(s) = Σ a_n n^{-s} (finite) with γ = ε Q^s.
DegreeZeroReport degree_zero_constraints(double Q, const std::vector<cplx>& a_1_to_M, double tol = 1e-9);

enum class QBound { Below, Boundary, Above };

struct QProbe {
    double Q;      // S*-normalized
    double bound;  // π^{-1/2}
    QBound status;
};

QProbe q_lower_bound_probe(const lfunc::GammaFactor& g);

}  // namespace selberg::gate
