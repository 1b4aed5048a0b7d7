#pragma once

// Prime sums behind Selberg's conjectures: Σ|a_p|²/p, Σ a_p ā'_p/p and
// Σ a_p/p^{1+iα}, accumulated over a sieve.

#include <cstdint>
#include <vector>

#include "selberg/lfunc.hpp"

namespace selberg::stats {

struct PrimeTable {
    std::uint32_t limit = 0;
    std::vector<std::uint32_t> primes;

    static PrimeTable build(std::uint32_t limit);
};

enum class SeriesKind { Selberg, Orthogonality, PoleDivergence };

struct StatSeries {
    SeriesKind kind;
    std::vector<double> checkpoints;
    std::vector<cplx> partial_sums;
};

/// count points x_k = lo (hi/lo)^{k/(count-1)}; count = 0 means ratio-2
/// spacing from lo, with hi always included.
std::vector<double> geometric_checkpoints(double lo, double hi, int count = 0);

StatSeries selberg_sum(const lfunc::SelbergFunction& F, const PrimeTable& table, const std::vector<double>& checkpoints);

StatSeries orthogonality_sum(const lfunc::SelbergFunction& F, const lfunc::SelbergFunction& G, const PrimeTable& table,
                             const std::vector<double>& checkpoints);

/// max over every prime p0 <= X of |Σ_{p<=p0} a_p(F) conj(a_p(G)) / p|.
double orthogonality_sup(const lfunc::SelbergFunction& F, const lfunc::SelbergFunction& G, const PrimeTable& table,
                         double X);

StatSeries pole_divergence_sum(const lfunc::SelbergFunction& F, double alpha, const PrimeTable& table,
                               const std::vector<double>& checkpoints);

struct NFEstimate {
    double slope;
    double intercept;
    long nearest;
    double distance;  // |slope - nearest|
    double rms;       // fit residual
    StatSeries series;
};

/// Least-squares slope of Σ_{p<=x}|a_p|²/p against log log x over geometric
/// checkpoints in [√X, X]. Requires X >= 1000 and at least 4 checkpoints.
NFEstimate estimate_nF(const lfunc::SelbergFunction& F, const PrimeTable& table, double X, int count = 0);

struct Factor {
    const lfunc::SelbergFunction* F;
    int exponent;
};

struct AdditivityReport {
    int target;                 // Σ e_i²
    NFEstimate estimate;        // for the product
    double ap_identity_error;   // max_p |a_p(F) - Σ e_i a_p(F_i)|
    std::uint32_t primes_checked;
};

AdditivityReport nF_additivity_check(const std::vector<Factor>& factors, const PrimeTable& table, double X);

}  // namespace selberg::stats
