#include "selberg/converse.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>

#include "selberg/modular.hpp"
#include "selberg/numtheory.hpp"
#include "selberg/quadrature.hpp"

namespace selberg::converse {

namespace {

// The small-argument guard in bessel_k protects huge orders; the orders here
// are O(1) so the kernel may go much closer to 0.
const specfun::BesselKConfig kNearZero{40.0, 1e-300, 14};

double h_alpha(double alpha, double t) {
    if (t == 0.0) return 0.0;
    return specfun::bessel_h(alpha, t);
}

// Terms of f: relative accuracy where K is not tiny, absolute near its zeros.
cplx k_term(cplx beta, double y) {
    static const Accuracy kacc = specfun::default_accuracy().with_abs(1e-14);
    return specfun::bessel_k(beta, y, kacc, kNearZero);
}

bool is_real_or_imaginary(cplx b) { return b.real() == 0.0 || b.imag() == 0.0; }

}  // namespace

void GL2Params::validate() const {
    if (!(alpha >= -0.5)) throw DomainError("GL2 parameters: alpha must be >= -1/2");
    if (!is_real_or_imaginary(beta)) throw DomainError("GL2 parameters: beta must be real or purely imaginary");
    if (!(q > 0.0)) throw DomainError("GL2 parameters: q must be positive");
    if (a.size() < 2) throw DomainError("GL2 parameters: no coefficients");
    if (!(bound.C > 0.0)) throw DomainError("GL2 parameters: coefficient bound constant must be positive");
}

GL2Params GL2Params::delta(std::size_t N) {
    GL2Params P;
    P.alpha = 5.5;
    P.beta = 0.5;
    P.q = 1.0;
    const auto d = modular::delta_normalized(N);
    P.a.assign(d.begin(), d.end());
    P.bound = {nt::divisor_bound_constant(0.25), 0.25};
    return P;
}

GL2Params GL2Params::single(double alpha, cplx beta, double q) {
    GL2Params P;
    P.alpha = alpha;
    P.beta = beta;
    P.q = q;
    P.a = {0.0, 1.0};
    P.bound = {1.0, 0.0};
    P.finite = true;
    return P;
}

cplx f_xy_terms(const GL2Params& P, double x, double y, std::size_t N) {
    const double sq = std::sqrt(P.q);
    const double a = 2.0 * kPi * y / sq, b = 2.0 * kPi * x / sq;
    cplx sum = 0.0;
    for (std::size_t n = 1; n <= std::min(N, P.N()); ++n) {
        if (P.a[n] == 0.0) continue;
        const double dn = static_cast<double>(n);
        sum += P.a[n] * h_alpha(P.alpha, b * dn) * k_term(P.beta, a * dn);
    }
    return std::sqrt(y) * sum;
}

FxyResult f_xy(const GL2Params& P, double x, double y, const Accuracy& acc) {
    P.validate();
    acc.validate();
    if (!(x >= 0.0) || !(y > 0.0)) throw DomainError("f(x, y): need x >= 0, y > 0");
    if (!P.finite && y < P.y_min) {
        std::ostringstream os;
        os << "f(x, y): y = " << y << " below the certified range (y_min = " << P.y_min << ")";
        throw AccuracyError(os.str());
    }
    const double sq = std::sqrt(P.q);
    const double a = 2.0 * kPi * y / sq, b = 2.0 * kPi * x / sq;
    const double nu = std::abs(P.beta.real());
    // e^u K_ν(u) is decreasing in u, so its value at u = a bounds every later term.
    const double kscale = P.finite ? 0.0 : specfun::bessel_k_scaled(nu, a, specfun::default_accuracy(), kNearZero).real();
    const double e = P.bound.exponent;
    const double ry = std::sqrt(y);

    cplx sum = 0.0;
    const std::size_t limit = std::min(P.N(), acc.max_terms);
    for (std::size_t n = 1; n <= limit; ++n) {
        const double dn = static_cast<double>(n);
        if (P.a[n] != 0.0)
            sum += P.a[n] * h_alpha(P.alpha, b * dn) * k_term(P.beta, a * dn);
        if (P.finite) continue;
        const double m = dn + 1.0;
        const double rho = std::pow(1.0 + 1.0 / m, e + 0.5) * std::exp(-a);
        if (rho >= 1.0) continue;
        const double first = ry * P.bound.C * std::pow(m, e) * std::sqrt(1.0 + b * m) * kscale * std::exp(-a * m);
        const double tail = first / (1.0 - rho);
        if (tail <= acc.abs_tol) return {ry * sum, n, tail};
    }
    if (P.finite) return {ry * sum, P.N(), 0.0};
    std::ostringstream os;
    os << "f(" << x << ", " << y << "): tail not below " << acc.abs_tol << " within " << limit << " coefficients";
    throw AccuracyError(os.str());
}

SymmetryPoint symmetry_residual(const GL2Params& P, double r, double theta, const Accuracy& acc) {
    if (!(r > 0.0) || !(theta > 0.0) || !(theta < kPi / 2)) throw DomainError("symmetry_residual: need r > 0, 0 < θ < π/2");
    const double c = std::cos(theta), s = std::sin(theta);
    const FxyResult L = f_xy(P, r * c, r * s, acc);
    const FxyResult R = f_xy(P, c / r, s / r, acc);
    SymmetryPoint pt{r, theta, L.value, std::conj(R.value), 0.0, L.terms, R.terms};
    pt.residual = std::abs(pt.lhs - pt.rhs);
    return pt;
}

namespace {

SymmetryReport sweep_impl(const GL2Params& P, const std::vector<double>& rs, const std::vector<double>& thetas,
                          const Accuracy& acc, bool parallel) {
    const std::size_t n = rs.size() * thetas.size();
    SymmetryReport rep;
    rep.points.resize(n);
    std::exception_ptr err;
    auto one = [&](std::size_t i) {
        rep.points[i] = symmetry_residual(P, rs[i / thetas.size()], thetas[i % thetas.size()], acc);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < n; ++i) {
            try {
                one(i);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) one(i);
    }
    if (err) std::rethrow_exception(err);
    for (const auto& p : rep.points) rep.max_residual = std::max(rep.max_residual, p.residual);
    return rep;
}

}  // namespace

SymmetryReport symmetry_sweep(const GL2Params& P, const std::vector<double>& rs, const std::vector<double>& thetas,
                              const Accuracy& acc) {
    return sweep_impl(P, rs, thetas, acc, true);
}

namespace reference {
SymmetryReport symmetry_sweep_serial(const GL2Params& P, const std::vector<double>& rs,
                                     const std::vector<double>& thetas, const Accuracy& acc) {
    return sweep_impl(P, rs, thetas, acc, false);
}
}  // namespace reference

cplx mellin_pair_closed(double alpha, cplx beta, double a, double b, cplx s) {
    using specfun::log_gamma;
    const cplx g1 = (s + alpha + beta) / 2.0, g2 = (s + alpha - beta) / 2.0;
    const cplx lg = log_gamma(g1) + log_gamma(g2) - log_gamma(alpha + 1.0);
    const cplx pre = std::pow(a / b, alpha) * std::exp(-s * std::log(b) + (s - 2.0) * std::log(2.0) + lg);
    return pre * specfun::hyp2f1(g1, g2, alpha + 1.0, -(a * a) / (b * b));
}

Comparison mellin_pair_check(double alpha, cplx beta, double a, double b, cplx s, const Accuracy& acc) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("mellin_pair_check: a, b must be positive");
    if (!(alpha >= -0.5) || !is_real_or_imaginary(beta)) throw DomainError("mellin_pair_check: bad orders");
    const double kappa = s.real() + alpha - std::abs(beta.real());
    if (!(kappa > 0.0)) throw DomainError("mellin_pair_check: integral diverges at 0 (need Re s + α > |Re β|)");

    // K_{iμ} has zeros near the origin; only absolute accuracy is meaningful there.
    const Accuracy kacc = specfun::default_accuracy().with_abs(std::max(1e-3 * acc.abs_tol, 1e-14));
    auto g = [&](double u) {
        return specfun::bessel_j(alpha, a * u) * specfun::bessel_k(beta, b * u, kacc, kNearZero) *
               std::exp((s - 1.0) * std::log(u));
    };
    const auto& gl = quad::gl20();
    const double u0 = std::min({1.0, 1.0 / a, 1.0 / b});
    const double lu0 = std::log(u0);

    // [0, u0] in v = log u; the integrand there behaves like e^{κv}.
    const double vmin = lu0 - (38.0 + std::log1p(1.0 / kappa)) / kappa;
    const int p1 = static_cast<int>(std::ceil((lu0 - vmin) / 0.5));
    cplx lhs = gl.integrate([&](double v) { return g(std::exp(v)) * std::exp(v); }, vmin, lu0, p1);

    // [u0, U]: panels no wider than half an oscillation of J.
    const double U = u0 + (40.0 + (std::abs(s.real()) + 1.0) * std::log1p(40.0 / b)) / b;
    const double w = std::min(kPi / a, 2.0 / b);
    const int p2 = static_cast<int>(std::ceil((U - u0) / w));
    lhs += gl.integrate(g, u0, U, p2);

    const cplx rhs = mellin_pair_closed(alpha, beta, a, b, s);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

cplx t_function(double alpha, cplx beta, double theta, cplx s) {
    if (!(theta > 0.0) || !(theta < kPi / 2)) throw DomainError("T(s): need 0 < θ < π/2");
    const double cot = 1.0 / std::tan(theta);
    const cplx A = (s + alpha + beta + 0.5) / 2.0, B = (s + alpha - beta + 0.5) / 2.0;
    return std::exp(-s * std::log(std::sin(theta))) * specfun::hyp2f1(A, B, alpha + 1.0, -cot * cot);
}

Comparison t_symmetry_check(double alpha, cplx beta, double theta, cplx s) {
    const cplx l = t_function(alpha, beta, theta, s);
    const cplx r = t_function(alpha, beta, theta, 1.0 - s);
    return {l, r, std::abs(l - r)};
}

cplx gl2_kernel(const GL2Params& P, double y) {
    const double sq = std::sqrt(P.q);
    return 4.0 * std::pow(kPi * y / sq, P.alpha + 0.5) *
           specfun::bessel_k(P.beta, 2.0 * kPi * y / sq, specfun::default_accuracy(), kNearZero);
}

namespace {

cplx log_gamma_gl2(const GL2Params& P, cplx s) {
    return s * std::log(std::sqrt(P.q) / kPi) + specfun::log_gamma((P.alpha + P.beta + 0.5 + s) / 2.0) +
           specfun::log_gamma((P.alpha - P.beta + 0.5 + s) / 2.0);
}

}  // namespace

cplx gl2_phi(const GL2Params& P, cplx s, const Accuracy& acc) {
    P.validate();
    const double e = P.bound.exponent;
    const double sigma = s.real();
    if (P.finite || sigma > 1.0 + e + 0.05) {
        std::size_t N = P.N();
        if (!P.finite) {
            // C Σ_{n>N} n^{e-σ} <= C N^{1+e-σ} / (σ-1-e)
            const double k = sigma - 1.0 - e;
            const double scale = std::exp(log_gamma_gl2(P, s).real());
            const double need = std::exp(std::log(P.bound.C * scale / (k * acc.abs_tol)) / k);
            if (!(need <= static_cast<double>(P.N())))
                throw AccuracyError("gl2_phi: Dirichlet series needs more coefficients than supplied");
            N = static_cast<std::size_t>(std::ceil(need));
        }
        cplx F = 0.0;
        for (std::size_t n = 1; n <= N; ++n)
            if (P.a[n] != 0.0) F += P.a[n] * std::exp(-s * std::log(static_cast<double>(n)));
        return std::exp(log_gamma_gl2(P, s)) * F;
    }

    // Split at x = 1 and fold [0, 1] onto [1, ∞) with S(1/x) = x S̄(x).
    const double sq = std::sqrt(P.q);
    auto S = [&](double x) {
        cplx sum = 0.0;
        for (std::size_t n = 1; n <= P.N(); ++n) {
            const double y = static_cast<double>(n) * x;
            const double env = P.bound.C * std::pow(static_cast<double>(n), e) * std::abs(gl2_kernel(P, y));
            if (P.a[n] != 0.0) sum += P.a[n] * gl2_kernel(P, y);
            if (2.0 * kPi * y / sq > 10.0 && env < 1e-3 * acc.abs_tol) return sum;
        }
        throw AccuracyError("gl2_phi: theta series not converged within the supplied coefficients");
    };
    // Upper cut where the n = 1 envelope has died.
    double X = 1.0;
    while (P.bound.C * std::abs(gl2_kernel(P, X)) * std::pow(X, std::abs(sigma) + 1.0) > 1e-3 * acc.abs_tol) X += 0.5;
    const int panels = static_cast<int>(std::ceil((X - 1.0) / 0.25));
    return quad::gl20().integrate(
        [&](double x) {
            const cplx v = S(x);
            return v * std::exp((s - 1.0) * std::log(x)) + std::conj(v) * std::exp(-s * std::log(x));
        },
        1.0, X, panels);
}

Comparison mellin_M_check(const GL2Params& P, double theta, cplx s, const Accuracy& acc) {
    P.validate();
    if (!(theta > 0.0) || !(theta < kPi / 2)) throw DomainError("mellin_M_check: need 0 < θ < π/2");
    const double c = std::cos(theta), sn = std::sin(theta);
    const Accuracy fa = acc.with_abs(std::min(acc.abs_tol, 1e-15));

    auto integrand = [&](double v) {
        const double r = std::exp(v);
        return f_xy(P, r * c, r * sn, fa).value * std::exp((s - 0.5) * v);
    };
    // Trapezoid in v = log r; the integrand decays at both ends and is
    // analytic in a strip, so the rule converges geometrically.
    const double h = 0.05;
    const double v0 = 0.0;
    cplx total = integrand(v0);
    double peak = std::abs(total);
    for (int dir : {+1, -1}) {
        int quiet = 0;
        for (int k = 1; k < 4000; ++k) {
            const double v = v0 + dir * k * h;
            cplx val;
            try {
                val = integrand(v);
            } catch (const AccuracyError&) {
                if (peak > 0.0 && quiet > 0) break;
                throw;
            }
            total += val;
            peak = std::max(peak, std::abs(val));
            quiet = (std::abs(val) < 1e-13 * peak) ? quiet + 1 : 0;
            if (quiet >= 8) break;
        }
    }
    const cplx lhs = total * h;

    const cplx pre = std::pow(2.0, -1.5) * std::sqrt(c) * std::pow(c / sn, P.alpha) /
                     std::exp(specfun::log_gamma(1.0 + P.alpha));
    const cplx rhs = pre * t_function(P.alpha, P.beta, theta, s) * gl2_phi(P, s, acc);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

double j112_closed_form(double x) {
    if (!(x > 0.0)) throw DomainError("j112_closed_form: x must be positive");
    const double i2 = 1.0 / (x * x);
    return std::cos(x) * (-1.0 + 105.0 * i2 - 945.0 * i2 * i2) +
           std::sin(x) * (15.0 / x - 420.0 * i2 / x + 945.0 * i2 * i2 / x);
}

Comparison j_closed_form_check(double x) {
    const double l = j112_closed_form(x);
    const double r = std::sqrt(kPi / 2.0) * std::sqrt(x) * specfun::bessel_j(5.5, x);
    return {l, r, std::abs(l - r)};
}

double delta_on_imaginary_axis(double y, const Accuracy& acc) {
    if (!(y > 0.0)) throw DomainError("Δ(iy): y must be positive");
    const double a = 2.0 * kPi * y;
    std::size_t cap = 64;
    std::vector<modular::i128> tau = modular::ramanujan_tau(cap);
    double sum = 0.0;
    for (std::size_t n = 1; n <= acc.max_terms; ++n) {
        if (n > cap) {
            cap *= 4;
            tau = modular::ramanujan_tau(cap);
        }
        sum += static_cast<double>(tau[n]) * std::exp(-a * static_cast<double>(n));
        // Σ_{m>n} 2 m^6 e^{-am}, accepted against the partial sum.
        const double m = static_cast<double>(n) + 1.0;
        const double rho = std::pow(1.0 + 1.0 / m, 6.0) * std::exp(-a);
        if (rho >= 1.0) continue;
        const double tail = 2.0 * std::pow(m, 6.0) * std::exp(-a * m) / (1.0 - rho);
        if (tail <= std::max(acc.abs_tol, 0.5 * acc.rel_tol * std::abs(sum))) return sum;
    }
    throw AccuracyError("Δ(iy): too many terms needed; use the modular transform");
}

TransformCheck delta_transform_check(double y, const Accuracy& acc) {
    if (!(y > 0.0)) throw DomainError("delta_transform_check: y must be positive");
    const double l = delta_on_imaginary_axis(y, acc);
    const double r = std::pow(y, -12.0) * delta_on_imaginary_axis(1.0 / y, acc);
    return {l, r, std::abs(l - r)};
}

double g_series(const GL2Params& P, int k, double y, const Accuracy& acc) {
    P.validate();
    if (!(y > 0.0)) throw DomainError("g(y): y must be positive");
    const double a = 2.0 * kPi * y / std::sqrt(P.q);
    const double w = 0.5 * (k - 1);
    const double e = P.bound.exponent + w;
    double sum = 0.0;
    for (std::size_t n = 1; n <= P.N(); ++n) {
        const double dn = static_cast<double>(n);
        const double term = P.a[n].real() * std::pow(dn, w) * std::exp(-a * dn);
        sum += term;
        if (P.finite) continue;
        const double m = dn + 1.0;
        const double rho = std::pow(1.0 + 1.0 / m, e) * std::exp(-a);
        if (rho >= 1.0) continue;
        const double tail = P.bound.C * std::pow(m, e) * std::exp(-a * m) / (1.0 - rho);
        if (tail <= std::max(acc.abs_tol, 0.5 * acc.rel_tol * std::abs(sum))) return sum;
    }
    if (P.finite) return sum;
    throw AccuracyError("g(y): series not converged within the supplied coefficients");
}

TransformCheck g_series_check(const GL2Params& P, int k, double y, const Accuracy& acc) {
    if (std::abs(P.beta - cplx(0.5, 0.0)) > 1e-12 || std::abs(P.alpha - 0.5 * (k - 1)) > 1e-12)
        throw DomainError("g_series_check: requires β = 1/2 and α = (k-1)/2");
    for (std::size_t n = 1; n <= P.N(); ++n)
        if (P.a[n].imag() != 0.0) throw DomainError("g_series_check: coefficients must be real");
    const double l = g_series(P, k, 1.0 / y, acc);
    const double r = std::pow(y, static_cast<double>(k)) * g_series(P, k, y, acc);
    return {l, r, std::abs(l - r)};
}

double pde_residual(const GL2Params& P, double x, double y, double h, const Accuracy& acc) {
    if (!(h > 0.0) || !(x - h > 0.0) || !(y - h > 0.0)) throw DomainError("pde_residual: stencil leaves the quadrant");
    // One truncation for the whole stencil so the difference quotient sees a
    // single smooth function.
    const std::size_t N = P.finite ? P.N() : f_xy(P, x + h, y - h, acc).terms;
    auto f = [&](double u, double v) { return f_xy_terms(P, u, v, N); };
    const cplx c = f(x, y);
    const cplx lap = (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * c) / (h * h);
    const cplx pot = (P.alpha * P.alpha - 0.25) / (x * x) + (P.beta * P.beta - 0.25) / (y * y);
    return std::abs(lap - pot * c);
}

}  // namespace selberg::converse
