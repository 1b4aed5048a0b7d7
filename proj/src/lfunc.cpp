#include "selberg/lfunc.hpp"
#include "selberg/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "selberg/modular.hpp"
#include "selberg/numtheory.hpp"
#include "selberg/specfun.hpp"

namespace selberg::lfunc {

namespace {

using nt::u64;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Power series of F_p through degree K.
std::vector<cplx> local_series(const LocalPoly& lp, std::size_t K) {
    std::vector<cplx> c(K + 1, 0.0);
    const auto& A = lp.coeffs;
    if (!lp.inverse) {
        for (std::size_t k = 0; k <= K && k < A.size(); ++k) c[k] = A[k];
        return c;
    }
    c[0] = 1.0;
    for (std::size_t k = 1; k <= K; ++k) {
        cplx v = 0.0;
        for (std::size_t j = 1; j <= k && j < A.size(); ++j) v -= A[j] * c[k - j];
        c[k] = v;
    }
    return c;
}

// Multiplicative coefficients from local factors.
std::vector<cplx> realize_euler(const LocalFactorFn& local, std::size_t N) {
    std::vector<cplx> a(N + 1, 0.0);
    if (N == 0) return a;
    a[1] = 1.0;
    const auto spf = nt::smallest_prime_factors(static_cast<std::uint32_t>(N));
    std::map<u64, std::vector<cplx>> series;
    for (std::size_t n = 2; n <= N; ++n) {
        const u64 p = spf[n];
        std::size_t m = n;
        std::size_t k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        auto it = series.find(p);
        if (it == series.end()) {
            std::size_t K = 0;
            for (u64 pk = p; pk <= N; pk *= p) ++K;
            const auto lp = local(p);
            it = series.emplace(p, local_series(lp ? *lp : LocalPoly{{1.0}, false}, K)).first;
        }
        a[n] = it->second[k] * a[m];
    }
    return a;
}

LocalPoly poly_product(const LocalPoly& x, const LocalPoly& y) {
    LocalPoly out{std::vector<cplx>(x.coeffs.size() + y.coeffs.size() - 1, 0.0), x.inverse};
    for (std::size_t i = 0; i < x.coeffs.size(); ++i)
        for (std::size_t j = 0; j < y.coeffs.size(); ++j) out.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
    return out;
}

}  // namespace

void GammaFactor::validate() const {
    if (std::abs(std::abs(epsilon) - 1.0) > 1e-12) throw DomainError("gamma factor: |epsilon| must be 1");
    if (!(Q > 0.0)) throw DomainError("gamma factor: Q must be positive");
    for (const auto& f : factors) {
        if (!(f.w > 0.0)) throw DomainError("gamma factor: weights w must be positive");
        if (f.mu.real() < 0.0) throw DomainError("gamma factor: Re mu must be >= 0");
    }
}

GammaFactor GammaFactor::conj() const {
    GammaFactor g = *this;
    g.epsilon = std::conj(epsilon);
    for (auto& f : g.factors) f.mu = std::conj(f.mu);
    return g;
}

double degree(const GammaFactor& g) {
    double d = 0.0;
    for (const auto& f : g.factors) d += 2.0 * f.w;
    return d;
}

cplx log_gamma_factor(const GammaFactor& g, cplx s) {
    cplx out(0.0, std::arg(g.epsilon));
    out += s * std::log(g.Q);
    for (const auto& f : g.factors) out += specfun::log_gamma(f.w * s + f.mu);
    return out;
}

GammaFactor normalized_gamma(const GammaFactor& g) {
    g.validate();
    GammaFactor out;
    out.epsilon = g.epsilon;
    out.Q = g.Q;
    for (const auto& f : g.factors) {
        const double kd = 2.0 * f.w;
        const long k = std::lround(kd);
        if (k < 1 || std::abs(kd - static_cast<double>(k)) > 1e-12) {
            std::ostringstream os;
            os << "normalize_to_sstar: weight " << f.w << " is not a positive multiple of 1/2";
            throw DomainError(os.str());
        }
        // Γ(k s/2 + μ) = (2π)^{(1-k)/2} k^{k s/2 + μ - 1/2} Π_j Γ(s/2 + (μ + j)/k)
        const double lk = std::log(static_cast<double>(k));
        out.Q *= std::exp(0.5 * static_cast<double>(k) * lk);
        out.epsilon *= std::polar(1.0, f.mu.imag() * lk);
        for (long j = 0; j < k; ++j) out.factors.push_back({0.5, (f.mu + static_cast<double>(j)) / static_cast<double>(k)});
    }
    return out;
}

SStarData normalize_to_sstar(const GammaFactor& g) {
    const GammaFactor n = normalized_gamma(g);
    SStarData s;
    s.d = static_cast<int>(n.factors.size());
    s.q = std::pow(kPi, s.d) * n.Q * n.Q;
    for (const auto& f : n.factors) s.mus.push_back(f.mu);
    s.eps_squared = n.epsilon * n.epsilon;
    return s;
}

ConductorValue conductor(const SStarData& s) {
    const double r = std::round(s.q);
    return {s.q, r >= 1.0 && std::abs(s.q - r) <= 1e-9 * std::max(1.0, s.q)};
}

cplx SelbergFunction::coeff(std::uint64_t n) const {
    if (n >= 1 && n <= N()) return a[n];
    if (finite && n > N()) return 0.0;
    std::ostringstream os;
    os << name << ": coefficient a_" << n << " outside the realized range 1.." << N();
    throw DomainError(os.str());
}

void SelbergFunction::validate() const {
    if (a.size() < 2) throw DomainError("SelbergFunction: no coefficients realized");
    if (!(theta_bound < 0.5)) throw DomainError("SelbergFunction: theta_bound must be < 1/2");
    if (pole_order < 0) throw DomainError("SelbergFunction: pole_order must be >= 0");
    if (!(bound.C > 0.0)) throw DomainError("SelbergFunction: Ramanujan constant must be positive");
    if (gamma) gamma->validate();
}

std::vector<cplx> builtin_coefficients(Builtin tag, std::size_t N, const chars::DirichletCharacter* chi) {
    std::vector<cplx> a(N + 1, 0.0);
    switch (tag) {
        case Builtin::Zeta:
            std::fill(a.begin() + 1, a.end(), cplx(1.0));
            break;
        case Builtin::Dirichlet:
            if (!chi) throw DomainError("builtin dirichlet: character required");
            for (std::size_t n = 1; n <= N; ++n) a[n] = (*chi)(n);
            break;
        case Builtin::Delta: {
            const auto d = modular::delta_normalized(N);
            for (std::size_t n = 1; n <= N; ++n) a[n] = d[n];
            break;
        }
    }
    return a;
}

SelbergFunction make_zeta(std::size_t N) {
    SelbergFunction F;
    F.name = "zeta";
    F.a = builtin_coefficients(Builtin::Zeta, N);
    F.gamma = GammaFactor{1.0, 1.0 / std::sqrt(kPi), {{0.5, 0.0}}};
    F.pole_order = 1;
    F.residue = 1.0;
    F.local = [](u64) { return std::optional<LocalPoly>(LocalPoly{{1.0, -1.0}, true}); };
    F.validate();
    return F;
}

SelbergFunction make_dirichlet(const chars::DirichletCharacter& chi, std::size_t N) {
    if (chi.modulus() == 1) {
        SelbergFunction F = make_zeta(N);
        return F;
    }
    SelbergFunction F;
    std::ostringstream os;
    os << "L(s, chi mod " << chi.modulus() << ")";
    F.name = os.str();
    F.a = builtin_coefficients(Builtin::Dirichlet, N, &chi);
    if (chi.primitive()) {
        const cplx W = chars::gauss_sum(chi).root_number;
        const double q = static_cast<double>(chi.modulus());
        F.gamma = GammaFactor{std::sqrt(std::conj(W)), std::sqrt(q / kPi), {{0.5, 0.5 * chi.parity()}}};
    }
    F.pole_order = 0;
    F.local = [chi](u64 p) { return std::optional<LocalPoly>(LocalPoly{{1.0, -chi(p)}, true}); };
    F.validate();
    return F;
}

SelbergFunction make_delta(std::size_t N) {
    SelbergFunction F;
    F.name = "delta";
    F.a = builtin_coefficients(Builtin::Delta, N);
    F.gamma = GammaFactor{1.0, 1.0 / (2.0 * kPi), {{1.0, 5.5}}};
    F.pole_order = 0;
    F.bound = {nt::divisor_bound_constant(0.25), 0.25};
    const auto ap = F.a;
    F.local = [ap](u64 p) -> std::optional<LocalPoly> {
        if (p >= ap.size()) return std::nullopt;
        return LocalPoly{{1.0, -ap[p], 1.0}, true};
    };
    F.validate();
    return F;
}

SelbergFunction make_builtin(Builtin tag, std::size_t N, const chars::DirichletCharacter* chi) {
    switch (tag) {
        case Builtin::Zeta:
            return make_zeta(N);
        case Builtin::Dirichlet:
            if (!chi) throw DomainError("builtin dirichlet: character required");
            return make_dirichlet(*chi, N);
        case Builtin::Delta:
            return make_delta(N);
    }
    throw DomainError("unknown builtin");
}

SelbergFunction make_explicit(std::vector<cplx> a_1_to_N, std::optional<GammaFactor> gamma, int pole_order,
                              std::optional<cplx> residue) {
    SelbergFunction F;
    F.name = "explicit";
    F.a.assign(1, 0.0);
    F.a.insert(F.a.end(), a_1_to_N.begin(), a_1_to_N.end());
    F.finite = true;
    F.gamma = std::move(gamma);
    F.pole_order = pole_order;
    F.residue = residue;
    double C = 0.0;
    for (std::size_t n = 1; n < F.a.size(); ++n) C = std::max(C, std::abs(F.a[n]));
    F.bound = {std::max(C, 1e-300), 0.0};
    F.validate();
    return F;
}

SelbergFunction make_euler(const std::map<std::uint64_t, LocalPoly>& factors, EulerDefault fallback, std::size_t N,
                           std::optional<GammaFactor> gamma, int pole_order, std::optional<cplx> residue) {
    for (const auto& [p, lp] : factors) {
        if (!nt::is_prime(p)) throw DomainError("euler factor attached to a non-prime");
        if (lp.coeffs.empty() || std::abs(lp.coeffs[0] - 1.0) > 1e-15)
            throw DomainError("euler factor must have A_0 = 1");
    }
    SelbergFunction F;
    F.name = "euler";
    F.local = [factors, fallback](u64 p) -> std::optional<LocalPoly> {
        auto it = factors.find(p);
        if (it != factors.end()) return it->second;
        if (fallback == EulerDefault::Zeta) return LocalPoly{{1.0, -1.0}, true};
        return LocalPoly{{1.0}, false};
    };
    F.a = realize_euler(F.local, N);
    F.gamma = std::move(gamma);
    F.pole_order = pole_order;
    F.residue = residue;
    // Ramanujan constant from the realized range.
    double C = 0.0;
    for (std::size_t n = 1; n <= N; ++n) C = std::max(C, std::abs(F.a[n]));
    F.bound = {std::max(C, 1.0), 0.0};
    F.validate();
    return F;
}

SelbergFunction conjugate(const SelbergFunction& F) {
    SelbergFunction G = F;
    G.name = "conj(" + F.name + ")";
    for (auto& v : G.a) v = std::conj(v);
    if (G.gamma) G.gamma = F.gamma->conj();
    if (G.residue) G.residue = std::conj(*F.residue);
    if (F.local) {
        auto inner = F.local;
        G.local = [inner](u64 p) -> std::optional<LocalPoly> {
            auto lp = inner(p);
            if (lp)
                for (auto& c : lp->coeffs) c = std::conj(c);
            return lp;
        };
    }
    return G;
}

SelbergFunction twist(const SelbergFunction& F, const chars::DirichletCharacter& chi) {
    SelbergFunction G;
    std::ostringstream os;
    os << F.name << " x chi mod " << chi.modulus();
    G.name = os.str();
    G.a = F.a;
    for (std::size_t n = 1; n < G.a.size(); ++n) G.a[n] *= chi(n);
    G.finite = F.finite;
    G.theta_bound = F.theta_bound;
    G.bound = F.bound;
    if (F.local) {
        auto inner = F.local;
        G.local = [inner, chi](u64 p) -> std::optional<LocalPoly> {
            auto lp = inner(p);
            if (!lp) return lp;
            cplx x = 1.0;
            for (auto& c : lp->coeffs) {
                c *= x;
                x *= chi(p);
            }
            return lp;
        };
    }
    return G;
}

SelbergFunction product(const SelbergFunction& F, const SelbergFunction& G) {
    SelbergFunction H;
    H.name = F.name + " * " + G.name;
    const std::size_t N = std::min(F.N(), G.N());
    H.a.assign(N + 1, 0.0);
    for (std::size_t d = 1; d <= N; ++d) {
        if (F.a[d] == 0.0) continue;
        for (std::size_t m = 1; d * m <= N; ++m) H.a[d * m] += F.a[d] * G.a[m];
    }
    H.finite = F.finite && G.finite && F.N() == G.N();
    if (F.gamma && G.gamma) {
        GammaFactor g{F.gamma->epsilon * G.gamma->epsilon, F.gamma->Q * G.gamma->Q, F.gamma->factors};
        g.factors.insert(g.factors.end(), G.gamma->factors.begin(), G.gamma->factors.end());
        H.gamma = g;
    }
    H.pole_order = F.pole_order + G.pole_order;
    H.theta_bound = std::max(F.theta_bound, G.theta_bound);
    // Σ_{d|n} C_F d^e C_G (n/d)^e <= C_F C_G d(n) n^e <= C_F C_G C(1/4) n^{e + 1/4}
    H.bound = {F.bound.C * G.bound.C * nt::divisor_bound_constant(0.25),
               std::max(F.bound.exponent, G.bound.exponent) + 0.25};
    if (F.local && G.local) {
        auto fl = F.local, gl = G.local;
        H.local = [fl, gl](u64 p) -> std::optional<LocalPoly> {
            auto x = fl(p), y = gl(p);
            if (!x || !y || x->inverse != y->inverse) return std::nullopt;
            return poly_product(*x, *y);
        };
    }
    H.validate();
    return H;
}

MultiplicativityReport multiplicativity_check(const std::vector<cplx>& a, std::size_t N, double tol) {
    if (N >= a.size()) throw DomainError("multiplicativity_check: N exceeds realized coefficients");
    MultiplicativityReport r;
    for (std::size_t m = 2; m * (m + 1) <= N; ++m)
        for (std::size_t n = m + 1; m * n <= N; ++n) {
            if (nt::gcd(m, n) != 1) continue;
            ++r.pairs_checked;
            const cplx prod = a[m] * a[n];
            if (std::abs(a[m * n] - prod) > tol * std::max(1.0, std::abs(prod))) r.violations.emplace_back(m, n);
        }
    return r;
}

std::vector<cplx> formal_log(const std::vector<cplx>& P, int J) {
    if (P.empty() || std::abs(P[0] - 1.0) > 1e-15) throw DomainError("formal_log: constant term must be 1");
    auto A = [&](int j) { return j < static_cast<int>(P.size()) ? P[static_cast<std::size_t>(j)] : cplx(0.0); };
    std::vector<cplx> L(static_cast<std::size_t>(J) + 1, 0.0);
    for (int j = 1; j <= J; ++j) {
        cplx v = static_cast<double>(j) * A(j);
        for (int k = 1; k < j; ++k) v -= static_cast<double>(k) * L[static_cast<std::size_t>(k)] * A(j - k);
        L[static_cast<std::size_t>(j)] = v / static_cast<double>(j);
    }
    return {L.begin() + 1, L.end()};
}

std::vector<cplx> euler_log_coeffs(const SelbergFunction& F, std::uint64_t p, int J) {
    if (!nt::is_prime(p)) throw DomainError("euler_log_coeffs: p must be prime");
    if (J < 1) throw DomainError("euler_log_coeffs: J must be >= 1");
    if (F.local) {
        if (auto lp = F.local(p)) {
            auto L = formal_log(lp->coeffs, J);
            if (lp->inverse)
                for (auto& v : L) v = -v;
            return L;
        }
    }
    std::vector<cplx> series{1.0};
    for (u64 pk = p; pk <= F.N(); pk *= p) series.push_back(F.a[pk]);
    const int K = static_cast<int>(series.size()) - 1;
    if (K < 3 || J > K) {
        std::ostringstream os;
        os << "euler_log_coeffs: local factor at p = " << p << " unverifiable (" << K
           << " prime-power coefficients realized, " << J << " requested)";
        throw NotFoundError(os.str());
    }
    return formal_log(series, J);
}

namespace {

std::size_t certified_terms(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta, double& tail) {
    acc.validate();
    if (F.finite) {
        tail = 0.0;
        return F.N();
    }
    const double sigma = s.real();
    const double e = F.bound.exponent;
    if (sigma < 1.0 + e + delta) {
        std::ostringstream os;
        os << F.name << ": Re s = " << sigma << " is outside the certified half-plane Re s >= " << 1.0 + e + delta;
        throw DomainError(os.str());
    }
    const double k = sigma - 1.0 - e;
    // C M^{-k} / k < abs_tol
    const double M = std::ceil(std::pow(acc.abs_tol * k / F.bound.C, -1.0 / k));
    if (!(M <= static_cast<double>(acc.max_terms)) || !(M <= static_cast<double>(F.N()))) {
        std::ostringstream os;
        os << F.name << ": certifying the tail at s = " << s << " needs " << fmt(M) << " terms (limit "
           << std::min<std::size_t>(acc.max_terms, F.N()) << ")";
        throw AccuracyError(os.str());
    }
    const auto Mi = static_cast<std::size_t>(std::max(1.0, M));
    tail = F.bound.C * std::pow(static_cast<double>(Mi), -k) / k;
    return Mi;
}

}  // namespace

EvalResult dirichlet_eval(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta) {
    double tail = 0.0;
    const std::size_t M = certified_terms(F, s, acc, delta, tail);
    const cplx sum = ordered_parallel_sum(1, static_cast<std::int64_t>(M), [&](std::int64_t n) -> cplx {
        const cplx an = F.a[static_cast<std::size_t>(n)];
        if (an == 0.0) return 0.0;
        return an * std::exp(-s * std::log(static_cast<double>(n)));
    });
    return {sum, tail, M};
}

namespace reference {

EvalResult dirichlet_eval_serial(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta) {
    double tail = 0.0;
    const std::size_t M = certified_terms(F, s, acc, delta, tail);
    cplx sum = 0.0;
    for (std::size_t n = 1; n <= M; ++n) sum += F.a[n] * std::pow(static_cast<double>(n), -s);
    return {sum, tail, M};
}

}  // namespace reference

cplx completed_phi(const SelbergFunction& F, cplx s, const Accuracy& acc, double delta) {
    if (!F.gamma) throw DomainError(F.name + ": gamma factor unknown");
    const cplx lg = log_gamma_factor(*F.gamma, s);
    return std::exp(lg) * dirichlet_eval(F, s, acc, delta).value;
}

std::vector<TrivialZero> trivial_zeros(const GammaFactor& g, int pole_order, double lo, double hi) {
    std::vector<TrivialZero> zs;
    for (const auto& f : g.factors)
        for (int n = 0;; ++n) {
            const cplx loc = -(static_cast<double>(n) + f.mu) / f.w;
            if (loc.real() < lo - 1e-12) break;
            if (loc.real() > hi + 1e-12) continue;
            auto it = std::find_if(zs.begin(), zs.end(), [&](const TrivialZero& z) { return std::abs(z.location - loc) < 1e-9; });
            if (it == zs.end()) zs.push_back({loc, 1});
            else ++it->order;
        }
    for (auto& z : zs)
        if (std::abs(z.location) < 1e-12) z.order -= pole_order;
    zs.erase(std::remove_if(zs.begin(), zs.end(), [](const TrivialZero& z) { return z.order <= 0; }), zs.end());
    std::sort(zs.begin(), zs.end(), [](const TrivialZero& x, const TrivialZero& y) {
        return x.location.real() != y.location.real() ? x.location.real() > y.location.real()
                                                      : x.location.imag() < y.location.imag();
    });
    return zs;
}

bool AuditReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const AuditItem& i) { return i.passed; });
}

AuditReport axiom_audit(const SelbergFunction& F, const AuditConfig& cfg) {
    AuditReport rep;
    const std::size_t N = F.N();

    {
        const cplx a1 = F.a.size() > 1 ? F.a[1] : cplx(0.0);
        rep.items.push_back({"a1 = 1", std::abs(a1 - 1.0) <= 1e-12, "a_1 = " + fmt(a1.real()) + (a1.imag() != 0 ? " + " + fmt(a1.imag()) + "i" : "")});
    }
    {
        double worst = 0.0;
        std::size_t at = 1;
        for (std::size_t n = 1; n <= N; ++n) {
            const double r = std::abs(F.a[n]) / (F.bound.C * std::pow(static_cast<double>(n), F.bound.exponent));
            if (r > worst) {
                worst = r;
                at = n;
            }
        }
        std::ostringstream os;
        os << "max |a_n| / (C n^eps') = " << fmt(worst) << " at n = " << at << " (C = " << fmt(F.bound.C)
           << ", eps' = " << fmt(F.bound.exponent) << ")";
        rep.items.push_back({"Ramanujan bound", worst <= 1.0 + 1e-9, os.str()});
    }
    {
        double worst = -1e300;
        u64 worst_p = 0;
        int skipped = 0;
        const u64 top = std::min<u64>(cfg.max_prime, N);
        for (u64 p = 2; p <= top; ++p) {
            if (!nt::is_prime(p)) continue;
            std::vector<cplx> b;
            try {
                bool exact = F.local && F.local(p).has_value();
                int J = cfg.J;
                if (!exact) {
                    J = 0;
                    for (u64 pk = p; pk <= N; pk *= p) ++J;
                }
                b = euler_log_coeffs(F, p, J);
            } catch (const NotFoundError&) {
                ++skipped;
                continue;
            }
            const int J = static_cast<int>(b.size());
            for (int j = (J + 1) / 2; j <= J; ++j) {
                const double mag = std::abs(b[static_cast<std::size_t>(j - 1)]) * j;
                if (mag <= 0.0) continue;
                const double th = std::log(mag) / (j * std::log(static_cast<double>(p)));
                if (th > worst) {
                    worst = th;
                    worst_p = p;
                }
            }
        }
        std::ostringstream os;
        if (worst_p == 0) {
            os << "no prime with a verifiable local factor";
            rep.items.push_back({"Euler product (theta < 1/2)", false, os.str()});
        } else {
            os << "theta estimate " << fmt(worst) << " at p = " << worst_p << " (claimed theta_bound "
               << fmt(F.theta_bound) << ")";
            if (skipped) os << "; " << skipped << " primes unverifiable";
            rep.items.push_back({"Euler product (theta < 1/2)", worst < 0.5, os.str()});
        }
    }
    {
        const std::size_t M = std::min<std::size_t>(N, 100000);
        const auto mr = multiplicativity_check(F.a, M);
        std::ostringstream os;
        os << mr.pairs_checked << " coprime pairs with mn <= " << M << ", " << mr.violations.size() << " violations";
        if (!mr.ok()) os << " (first: " << mr.violations[0].first << " x " << mr.violations[0].second << ")";
        rep.items.push_back({"multiplicativity", mr.ok(), os.str()});
    }
    if (F.gamma) {
        rep.degree = degree(*F.gamma);
        const bool trivial = N >= 1 && F.finite && N == 1;
        rep.primitive_by_degree = rep.degree < 2.0 && !trivial;
        std::ostringstream os;
        os << "degree " << fmt(rep.degree) << (rep.primitive_by_degree ? ", primitive (degree < 2)" : "");
        rep.items.push_back({"degree", true, os.str()});
    }
    return rep;
}

}  // namespace selberg::lfunc
