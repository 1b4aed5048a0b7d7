#include "selberg/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace selberg::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;

// Lanczos coefficients, g = 7, n = 9 (Godfrey). Regenerate with any Lanczos
// coefficient tool at g = 7 if more digits are ever needed; relative error of
// Γ is below 2e-15 on Re z >= 1/2.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993227684700473478,  676.520368121885098567009190444019,
    -1259.13921672240287047156078755283, 771.3234287776530788486528258894,
    -176.61502916214059906584551354,     12.507343278686904814458936853,
    -0.13857109526572011689554707,       9.984369578019570859563e-6,
    1.50563273514931155834e-7};

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

cplx log_gamma_lanczos(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const cplx t = z + kLanczosG + 0.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

cplx log_sin_pi(cplx z) {
    const double y = z.imag();
    const cplx i(0.0, 1.0);
    if (std::abs(y) < 8.0) return std::log(std::sin(kPi * z));
    // sin(πz) = e^{-iπz}(1 - e^{2iπz}) i/2 for Im z > 0, mirrored below.
    if (y > 0.0)
        return -i * kPi * z + std::log(1.0 - std::exp(2.0 * i * kPi * z)) + cplx(-std::log(2.0), kPi / 2);
    return i * kPi * z + std::log(1.0 - std::exp(-2.0 * i * kPi * z)) + cplx(-std::log(2.0), -kPi / 2);
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) {
        std::ostringstream os;
        os << "log_gamma: pole at z = " << z.real();
        throw PoleError(os.str(), static_cast<long long>(z.real()));
    }
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

double log_abs_gamma(double x) { return log_gamma(cplx(x, 0.0)).real(); }

// ---------------------------------------------------------------------------
// Bessel J

double bessel_j_series(double alpha, double x, const Accuracy& acc) {
    const double h = 0.5 * x;
    const double h2 = h * h;
    double term = std::exp(alpha * std::log(h) - log_abs_gamma(alpha + 1.0));
    double sum = term;
    double max_term = std::abs(term);
    for (std::size_t k = 1; k < acc.max_terms; ++k) {
        term *= -h2 / (static_cast<double>(k) * (static_cast<double>(k) + alpha));
        sum += term;
        max_term = std::max(max_term, std::abs(term));
        if (std::abs(term) <= 0.25 * kEps * std::abs(sum) && h2 < static_cast<double>(k + 1) * (k + 1 + alpha)) {
            if (max_term * kEps * 4.0 > acc.rel_tol * std::abs(sum) && max_term * kEps * 4.0 > acc.abs_tol)
                throw AccuracyError("bessel_j_series: cancellation exceeds tolerance");
            return sum;
        }
    }
    throw AccuracyError("bessel_j_series: term budget exhausted");
}

namespace {

// Hankel expansion. Returns false when the truncation estimate misses tol.
bool bessel_j_hankel(double alpha, double x, double rel_tol, double& out) {
    const double mu = 4.0 * alpha * alpha;
    double a = 1.0;
    double p = 1.0, q = 0.0;
    double last = std::numeric_limits<double>::infinity();
    double err = 0.0;
    bool terminated = false;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        a *= (mu - odd * odd) / (k * 8.0 * x);
        if (a == 0.0) {
            terminated = true;
            break;
        }
        const double mag = std::abs(a);
        if (mag > last) {  // asymptotic series started diverging
            err = last;
            break;
        }
        last = mag;
        // (-1)^{floor(k/2)} pattern: P collects even k, Q odd k.
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) p += sign * a;
        else q += sign * a;
        if (mag < 0.1 * kEps) {
            terminated = true;
            break;
        }
    }
    if (!terminated && err == 0.0) err = last;
    if (!terminated && err > 0.1 * rel_tol * (std::abs(p) + std::abs(q))) return false;
    const double phase = (0.5 * alpha + 0.25) * kPi;
    const double c = std::cos(x) * std::cos(phase) + std::sin(x) * std::sin(phase);
    const double s = std::sin(x) * std::cos(phase) - std::cos(x) * std::sin(phase);
    out = std::sqrt(2.0 / (kPi * x)) * (p * c - q * s);
    return true;
}

// Steed's method: CF1 for J'/J at order alpha, downward recurrence to
// mu = alpha - nl, CF2 for (p + iq) at mu, Wronskian normalisation.
double bessel_j_steed(double alpha, double x, std::size_t max_iter) {
    constexpr double fpmin = std::numeric_limits<double>::min() / kEps;
    const int nl = std::max(0, static_cast<int>(alpha - x + 1.5));
    const double xmu = alpha - nl;
    const double xmu2 = xmu * xmu;
    const double xi = 1.0 / x;
    const double xi2 = 2.0 * xi;
    const double w = xi2 / kPi;

    int isign = 1;
    double h = alpha * xi;
    if (h < fpmin) h = fpmin;
    double b = xi2 * alpha, d = 0.0, c = h;
    std::size_t i = 0;
    for (; i < max_iter; ++i) {
        b += xi2;
        d = b - d;
        if (std::abs(d) < fpmin) d = fpmin;
        c = b - 1.0 / c;
        if (std::abs(c) < fpmin) c = fpmin;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (d < 0.0) isign = -isign;
        if (std::abs(del - 1.0) <= kEps) break;
    }
    if (i >= max_iter) throw AccuracyError("bessel_j: CF1 did not converge");

    double rjl = isign * fpmin;
    double rjpl = h * rjl;
    const double rjl1 = rjl;
    double fact = alpha * xi;
    double log_scale = 0.0;
    for (int l = nl; l >= 1; --l) {
        const double rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
        if (std::abs(rjl) > 1e200) {
            rjl *= 1e-200;
            rjpl *= 1e-200;
            log_scale += 200.0 * std::log(10.0);
        }
    }
    if (rjl == 0.0) rjl = kEps;
    const double f = rjpl / rjl;

    double a = 0.25 - xmu2;
    double p = -0.5 * xi;
    double q = 1.0;
    const double br = 2.0 * x;
    double bi = 2.0;
    fact = a * xi / (p * p + q * q);
    double cr = br + q * fact;
    double ci = bi + p * fact;
    double den = br * br + bi * bi;
    double dr = br / den;
    double di = -bi / den;
    double dlr = cr * dr - ci * di;
    double dli = cr * di + ci * dr;
    double temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    for (i = 1; i < max_iter; ++i) {
        a += 2.0 * static_cast<double>(i);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if (std::abs(dr) + std::abs(di) < fpmin) dr = fpmin;
        fact = a / (cr * cr + ci * ci);
        cr = br + cr * fact;
        ci = bi - ci * fact;
        if (std::abs(cr) + std::abs(ci) < fpmin) cr = fpmin;
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (std::abs(dlr - 1.0) + std::abs(dli) <= kEps) break;
    }
    if (i >= max_iter) throw AccuracyError("bessel_j: CF2 did not converge");

    const double gam = (p - f) / q;
    double rjmu = std::sqrt(w / ((p - f) * gam + q));
    rjmu = std::copysign(rjmu, rjl);
    const double result = rjl1 * (rjmu / rjl);
    return log_scale == 0.0 ? result : result * std::exp(-log_scale);
}

}  // namespace

BesselJRegime bessel_j_regime(double alpha, double x, const Accuracy& acc, const BesselJConfig& cfg) {
    if (x < cfg.series_limit) return BesselJRegime::Series;
    if (x >= std::max(cfg.asymptotic_min, 2.0 * alpha * alpha)) {
        double out = 0.0;
        if (bessel_j_hankel(alpha, x, acc.rel_tol, out)) return BesselJRegime::Asymptotic;
    }
    return BesselJRegime::ContinuedFraction;
}

double bessel_j(double alpha, double x, const Accuracy& acc, const BesselJConfig& cfg) {
    if (!(x > 0.0)) throw DomainError("bessel_j: x must be positive");
    if (!(alpha >= -0.5)) throw DomainError("bessel_j: order must be >= -1/2");
    if (x < cfg.series_limit) return bessel_j_series(alpha, x, acc);
    if (x >= std::max(cfg.asymptotic_min, 2.0 * alpha * alpha)) {
        double out = 0.0;
        if (bessel_j_hankel(alpha, x, acc.rel_tol, out)) return out;
    }
    if (alpha < 0.0) {
        // J_{a} = (2(a+1)/x) J_{a+1} - J_{a+2}; decreasing order is stable here.
        const double j1 = bessel_j_steed(alpha + 1.0, x, acc.max_terms);
        const double j2 = bessel_j_steed(alpha + 2.0, x, acc.max_terms);
        return 2.0 * (alpha + 1.0) / x * j1 - j2;
    }
    return bessel_j_steed(alpha, x, acc.max_terms);
}

// ---------------------------------------------------------------------------
// Bessel K

cplx bessel_k_scaled(cplx beta, double y, const Accuracy& acc, const BesselKConfig& cfg) {
    if (!(y > 0.0)) throw DomainError("bessel_k: y must be positive");
    if (y < cfg.y_min) throw DomainError("bessel_k: argument below configured minimum");
    const double b = std::abs(beta.real());

    // Imaginary order, small argument: K_{iμ}(y) = -π Im I_{iμ}(y) / sinh(μπ).
    if (beta.real() == 0.0 && beta.imag() != 0.0 && y < 2.0 + std::abs(beta.imag())) {
        const double mu = std::abs(beta.imag());
        const cplx nu(0.0, mu);
        const cplx lead = nu * std::log(0.5 * y) - log_gamma(1.0 + nu);
        cplx term = std::exp(lead);
        cplx sum = term;
        double mass = std::abs(term);
        const double z = 0.25 * y * y;
        for (int k = 1; k < 200 && std::abs(term) > kEps * mass; ++k) {
            term *= z / (static_cast<double>(k) * (static_cast<double>(k) + nu));
            sum += term;
            mass += std::abs(term);
        }
        const double scale = kPi / std::sinh(mu * kPi);
        const double K = -scale * sum.imag();
        // Rounding in the series plus the absolute error of the large phase Im(lead).
        const double err = mass * scale * kEps * (8.0 + 4.0 * std::abs(lead.imag()));
        if (err <= std::max(acc.rel_tol * std::abs(K), acc.abs_tol)) return K * std::exp(y);
    }

    // Log-envelope of the integrand relative to e^{-y}: -y(cosh t - 1) + b t.
    auto envelope = [&](double t) {
        const double sh = std::sinh(0.5 * t);
        return -2.0 * y * sh * sh + b * t;
    };
    const double t_peak = std::asinh(b / y);
    const double peak = envelope(t_peak);
    double t_max = t_peak + 1.0;
    while (envelope(t_max) > peak - cfg.log_cutoff) t_max *= 1.25;

    auto g = [&](double t) -> cplx {
        const double sh = std::sinh(0.5 * t);
        const double base = -2.0 * y * sh * sh - peak;
        return 0.5 * (std::exp(base + beta * t) + std::exp(base - beta * t));
    };

    int panels = 16;
    double h = t_max / panels;
    cplx sum = 0.5 * g(0.0);
    double abs_sum = 0.5 * std::abs(g(0.0));
    for (int k = 1; k <= panels; ++k) {
        const cplx v = g(k * h);
        sum += v;
        abs_sum += std::abs(v);
    }
    cplx integral = h * sum;
    // abs_tol applies to K itself; in the units of `integral` it is:
    const double abs_floor = acc.abs_tol * std::exp(y - peak);
    for (int level = 0; level < cfg.max_refinements; ++level) {
        cplx odd = 0.0;
        double abs_odd = 0.0;
        for (int k = 0; k < panels; ++k) {
            const cplx v = g((2 * k + 1) * 0.5 * h);
            odd += v;
            abs_odd += std::abs(v);
        }
        sum += odd;
        abs_sum += abs_odd;
        panels *= 2;
        h *= 0.5;
        const cplx refined = h * sum;
        const double diff = std::abs(refined - integral);
        integral = refined;
        if (level >= 1 && diff <= std::max(0.25 * acc.rel_tol * std::abs(integral), 0.25 * abs_floor)) {
            const double mass = h * abs_sum;
            if (mass * kEps * 4.0 > std::max(acc.rel_tol * std::abs(integral), abs_floor))
                throw AccuracyError("bessel_k: cancellation in the cosh integral exceeds tolerance");
            const cplx out = integral * std::exp(peak);
            if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
                throw AccuracyError("bessel_k: result overflows double range");
            return out;
        }
    }
    throw AccuracyError("bessel_k: trapezoid refinements did not agree");
}

// ---------------------------------------------------------------------------
// 2F1

cplx hyp2f1_series(cplx a, cplx b, cplx c, double z, const Accuracy& acc) {
    cplx term = 1.0;
    cplx sum = 1.0;
    double max_term = 1.0;
    for (std::size_t k = 0; k < acc.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const cplx ratio = (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0));
        term *= ratio * z;
        sum += term;
        const double mag = std::abs(term);
        max_term = std::max(max_term, mag);
        if (mag == 0.0) return sum;  // terminating series
        const double rho = std::abs(ratio * z);
        // Once the ratio has settled below one the tail is geometric.
        const double kn = kd + 1.0;
        const bool settled = kn > std::abs(a) + std::abs(b) + std::abs(c) + 2.0;
        if (settled && rho < 1.0 && mag * rho / (1.0 - rho) <= 0.5 * kEps * std::abs(sum)) {
            if (max_term * kEps * 8.0 > acc.rel_tol * std::abs(sum) && max_term * kEps * 8.0 > acc.abs_tol)
                throw AccuracyError("hyp2f1: cancellation exceeds tolerance");
            return sum;
        }
    }
    throw AccuracyError("hyp2f1: series did not converge within the term budget");
}

cplx hyp2f1(cplx a, cplx b, cplx c, double x, const Accuracy& acc) {
    if (is_nonpositive_integer(c)) throw PoleError("hyp2f1: c is a non-positive integer", static_cast<long long>(c.real()));
    if (!(x <= 0.0)) throw DomainError("hyp2f1: only x <= 0 is supported");
    if (x == 0.0) return 1.0;
    if (x > -0.5) return hyp2f1_series(a, b, c, x, acc);
    const double z = x / (x - 1.0);
    return std::exp(-a * std::log(1.0 - x)) * hyp2f1_series(a, c - b, c, z, acc);
}

}  // namespace selberg::specfun
