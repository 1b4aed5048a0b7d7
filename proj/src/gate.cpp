#include "selberg/gate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "selberg/numtheory.hpp"
#include "selberg/specfun.hpp"

namespace selberg::gate {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Solve the 3x3 normal equations by Gaussian elimination with pivoting.
std::array<double, 3> solve3(std::array<std::array<double, 4>, 3> m) {
    for (int c = 0; c < 3; ++c) {
        int piv = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        std::swap(m[c], m[piv]);
        if (std::abs(m[c][c]) < 1e-300) throw DomainError("decay_exponent: singular fit");
        for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            const double f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return {m[0][3] / m[0][0], m[1][3] / m[1][1], m[2][3] / m[2][2]};
}

cplx horner_monic(const std::vector<cplx>& A, cplx y) {
    // y^r + A_1 y^{r-1} + ... + A_r
    cplx v = 1.0;
    for (std::size_t j = 1; j < A.size(); ++j) v = v * y + A[j];
    return v;
}

cplx horner_monic_deriv(const std::vector<cplx>& A, cplx y) {
    const std::size_t r = A.size() - 1;
    cplx v = static_cast<double>(r);
    for (std::size_t j = 1; j < r; ++j) v = v * y + static_cast<double>(r - j) * A[j];
    return v;
}

double reconstruction_residual(const std::vector<cplx>& A, const std::vector<cplx>& roots) {
    const auto back = expand_roots(roots);
    double scale = 1.0, worst = 0.0;
    for (const auto& c : A) scale = std::max(scale, std::abs(c));
    for (std::size_t j = 0; j < A.size(); ++j) worst = std::max(worst, std::abs(back[j] - A[j]));
    return worst / scale;
}

}  // namespace

DecayProfile k_decay_profile(const lfunc::GammaFactor& g, const std::function<cplx(int)>& F_at, int N) {
    DecayProfile prof;
    for (int n = 0; n <= N; ++n) {
        prof.n.push_back(n);
        std::string why;
        double v = kNegInf;
        try {
            const cplx num = lfunc::log_gamma_factor(g, static_cast<double>(n + 1));
            const cplx den = lfunc::log_gamma_factor(g, -static_cast<double>(n));
            const cplx f = F_at ? F_at(n + 1) : cplx(1.0);
            if (f == 0.0) {
                why = "F(n+1) = 0";
            } else {
                v = num.real() - den.real() + std::log(std::abs(f)) - std::lgamma(n + 1.0);
            }
        } catch (const PoleError& e) {
            why = e.what();
        }
        prof.log_ratio.push_back(v);
        prof.reason.push_back(why);
    }
    return prof;
}

DecayProfile k_decay_profile(const lfunc::GammaFactor& g, int N) { return k_decay_profile(g, nullptr, N); }

double decay_exponent(const DecayProfile& profile) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < profile.n.size(); ++i)
        if (std::isfinite(profile.log_ratio[i])) pts.emplace_back(profile.n[i], profile.log_ratio[i]);
    if (pts.size() < 20) throw DomainError("decay_exponent: fewer than 20 finite entries");
    const std::size_t start = pts.size() - pts.size() / 3;
    std::array<std::array<double, 4>, 3> m{};
    for (std::size_t i = start; i < pts.size(); ++i) {
        const double n = pts[i].first;
        const std::array<double, 3> x{n * std::log(n), n, 1.0};
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) m[r][c] += x[r] * x[c];
            m[r][3] += x[r] * pts[i].second;
        }
    }
    return solve3(m)[0];
}

std::vector<cplx> expand_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (const auto& R : roots) {
        c.push_back(0.0);
        for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= R * c[j - 1];
    }
    return c;
}

LocalFactor local_roots(const std::vector<cplx>& coeffs, std::uint64_t p, const RootConfig& cfg) {
    if (coeffs.empty() || std::abs(coeffs[0] - 1.0) > 1e-15) throw DomainError("local_roots: A_0 must be 1");
    std::vector<cplx> A = coeffs;
    while (A.size() > 1 && A.back() == 0.0) A.pop_back();
    const std::size_t r = A.size() - 1;
    if (r < 1) throw DomainError("local_roots: degree must be at least 1");

    LocalFactor out{p, A, {}, 0.0};
    if (r == 1) {
        out.roots = {-A[1]};
        out.residual = reconstruction_residual(A, out.roots);
        return out;
    }

    double radius = 0.0;  // Cauchy bound
    for (std::size_t j = 1; j <= r; ++j) radius = std::max(radius, std::abs(A[j]));
    radius += 1.0;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt <= cfg.restarts; ++attempt) {
        std::vector<cplx> z(r);
        const cplx seed = attempt == 0 ? cplx(0.4, 0.9) : std::polar(0.5 + unif(rng), 2 * kPi * unif(rng));
        cplx w = 1.0;
        for (std::size_t k = 0; k < r; ++k) {
            w *= seed;
            z[k] = radius * w / std::abs(w) * (0.5 + 0.5 * (k + 1.0) / r);
        }
        for (int it = 0; it < cfg.max_iterations; ++it) {
            double move = 0.0;
            for (std::size_t k = 0; k < r; ++k) {
                cplx den = 1.0;
                for (std::size_t j = 0; j < r; ++j)
                    if (j != k) den *= z[k] - z[j];
                if (den == 0.0) den = 1e-300;
                const cplx dz = horner_monic(A, z[k]) / den;
                z[k] -= dz;
                move = std::max(move, std::abs(dz) / std::max(1.0, std::abs(z[k])));
            }
            if (move < 1e-16) break;
        }
        for (auto& y : z)
            for (int it = 0; it < 3; ++it) {
                const cplx d = horner_monic_deriv(A, y);
                if (std::abs(d) < 1e-300) break;
                const cplx step = horner_monic(A, y) / d;
                if (!(std::abs(step) < 1e-3 * std::max(1.0, std::abs(y)))) break;
                y -= step;
            }
        const double res = reconstruction_residual(A, z);
        if (res < best) {
            best = res;
            out.roots = z;
            out.residual = res;
        }
        if (res <= 1e-12) break;
    }
    if (!(best <= 1e-10)) {
        std::ostringstream os;
        os << "local_roots: reconstruction residual " << best << " after " << cfg.restarts << " restarts";
        throw AccuracyError(os.str());
    }
    std::sort(out.roots.begin(), out.roots.end(), [](cplx a, cplx b) {
        return std::abs(a) != std::abs(b) ? std::abs(a) > std::abs(b) : std::arg(a) < std::arg(b);
    });
    return out;
}

BjGrowth bj_growth(const LocalFactor& f, int J) {
    if (f.roots.empty()) throw DomainError("bj_growth: no roots");
    if (J < 1) throw DomainError("bj_growth: J must be >= 1");
    BjGrowth g;
    g.max_modulus = 0.0;
    for (const auto& R : f.roots) g.max_modulus = std::max(g.max_modulus, std::abs(R));
    int top = 0;
    for (const auto& R : f.roots)
        if (std::abs(std::abs(R) - g.max_modulus) <= 1e-9 * g.max_modulus) ++top;
    g.dominant = top == 1;
    const double M = g.max_modulus;
    for (int j = 1; j <= J; ++j) {
        // Σ R_i^j = M^j Σ (R_i / M)^j, kept in scaled form to avoid overflow.
        cplx s = 0.0;
        for (const auto& R : f.roots) s += M > 0 ? std::pow(R / M, j) : cplx(0.0);
        const double mag = std::abs(s);
        g.B.push_back(M > 0 ? -std::pow(M, j) * s / static_cast<double>(j) : cplx(0.0));
        if (mag == 0.0 || M == 0.0) {
            g.root_seq.push_back(0.0);
            g.corrected.push_back(0.0);
            continue;
        }
        g.corrected.push_back(M * std::pow(mag, 1.0 / j));
        g.root_seq.push_back(M * std::pow(mag / j, 1.0 / j));
    }
    const int from = J - std::max(1, J / 10);
    g.limsup_raw = *std::max_element(g.root_seq.begin() + from, g.root_seq.end());
    g.limsup = *std::max_element(g.corrected.begin() + from, g.corrected.end());
    return g;
}

ThetaVerdict theta_requirement(const LocalFactor& f, std::uint64_t p) {
    if (p < 2) throw DomainError("theta_requirement: p must be a prime");
    double M = 0.0;
    for (const auto& R : f.roots) M = std::max(M, std::abs(R));
    const double theta = M > 0 ? std::log(M) / std::log(static_cast<double>(p)) : kNegInf;
    return {theta, theta < 0.5 - 1e-9};
}

DegreeZeroReport degree_zero_constraints(double Q, const std::vector<cplx>& a, double tol) {
    DegreeZeroReport rep;
    if (!(Q > 0.0)) throw DomainError("degree_zero_constraints: Q must be positive");
    const std::size_t M = a.size();
    auto coef = [&](std::uint64_t n) { return n >= 1 && n <= M ? a[n - 1] : cplx(0.0); };

    const double q2 = Q * Q;
    const double r2 = std::round(q2);
    rep.q_squared_integral = r2 >= 1.0 && std::abs(q2 - r2) <= tol * std::max(1.0, q2);
    if (!rep.q_squared_integral) {
        rep.notes.push_back("Q^2 is not an integer");
        return rep;
    }
    rep.q_squared = static_cast<std::uint64_t>(r2);
    const std::uint64_t Q2 = rep.q_squared;

    for (std::uint64_t n = 1; n <= M; ++n)
        if (std::abs(coef(n)) > tol && Q2 % n != 0) rep.support_violations.push_back(n);

    const cplx lead = coef(Q2);
    rep.leading_modulus_ok = std::abs(std::abs(lead) - Q) <= tol * Q;
    rep.eps_star = lead / Q;
    if (std::abs(std::abs(rep.eps_star) - 1.0) > tol) rep.notes.push_back("a_{Q^2} / Q is not a unit");

    for (std::uint64_t m : nt::divisors(Q2)) {
        const cplx want = rep.eps_star * Q * std::conj(coef(m)) / static_cast<double>(m);
        if (std::abs(coef(Q2 / m) - want) > tol * std::max(1.0, std::abs(want))) rep.matching_violations.push_back(m);
    }
    rep.consistent = rep.support_violations.empty() && rep.leading_modulus_ok && rep.matching_violations.empty() &&
                     std::abs(std::abs(rep.eps_star) - 1.0) <= tol;

    bool admissible = true;
    for (auto [p, r] : Q2 > 1 ? nt::factorize(Q2) : std::vector<std::pair<std::uint64_t, int>>{}) {
        std::uint64_t pr = 1;
        for (int k = 0; k < r; ++k) pr *= p;
        const double mod = std::abs(coef(pr));
        std::vector<cplx> poly{1.0};
        for (std::uint64_t pk = p; pk <= Q2; pk *= p) poly.push_back(coef(pk));
        while (poly.size() > 1 && std::abs(poly.back()) <= tol) poly.pop_back();
        ThetaVerdict v{kNegInf, true};
        if (poly.size() > 1) v = theta_requirement(local_roots(poly, p), p);
        rep.prime_checks.push_back({p, r, mod, v});
        if (mod >= std::pow(static_cast<double>(p), 0.5 * r) * (1.0 - tol) && v.admissible)
            rep.notes.push_back("|a_{p^r}| >= p^{r/2} yet theta admissible");
        admissible = admissible && v.admissible;
    }
    rep.accepted = rep.consistent && admissible;
    return rep;
}

QProbe q_lower_bound_probe(const lfunc::GammaFactor& g) {
    if (std::abs(lfunc::degree(g) - 1.0) > 1e-12) throw DomainError("q_lower_bound_probe: degree must be 1");
    const double Q = lfunc::normalized_gamma(g).Q;
    const double bound = 1.0 / std::sqrt(kPi);
    QBound st = QBound::Above;
    if (std::abs(Q - bound) <= 1e-12 * bound) st = QBound::Boundary;
    else if (Q < bound) st = QBound::Below;
    return {Q, bound, st};
}

}  // namespace selberg::gate
