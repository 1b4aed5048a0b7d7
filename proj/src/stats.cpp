#include "selberg/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "selberg/numtheory.hpp"

namespace selberg::stats {

namespace {

void require_range(const lfunc::SelbergFunction& F, const PrimeTable& table, double x) {
    if (x > table.limit) {
        std::ostringstream os;
        os << "checkpoint " << x << " exceeds the prime table limit " << table.limit;
        throw DomainError(os.str());
    }
    if (x >= 2.0 && x > static_cast<double>(F.N())) {
        std::ostringstream os;
        os << F.name << ": checkpoint " << x << " exceeds realized coefficients (N = " << F.N() << ")";
        throw DomainError(os.str());
    }
}

template <class Term>
StatSeries accumulate(SeriesKind kind, const PrimeTable& table, const std::vector<double>& checkpoints, Term term) {
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end()))
        throw DomainError("checkpoints must be ascending");
    StatSeries out{kind, checkpoints, {}};
    cplx sum = 0.0;
    std::size_t i = 0;
    for (double x : checkpoints) {
        while (i < table.primes.size() && table.primes[i] <= x) sum += term(table.primes[i++]);
        out.partial_sums.push_back(sum);
    }
    return out;
}

}  // namespace

PrimeTable PrimeTable::build(std::uint32_t limit) { return {limit, nt::primes_up_to(limit)}; }

std::vector<double> geometric_checkpoints(double lo, double hi, int count) {
    if (!(lo > 0.0) || hi < lo) throw DomainError("geometric_checkpoints: need 0 < lo <= hi");
    std::vector<double> xs;
    if (count > 0) {
        if (count == 1) return {hi};
        for (int k = 0; k < count; ++k) xs.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
        xs.back() = hi;
        return xs;
    }
    for (double x = lo; x < hi; x *= 2.0) xs.push_back(x);
    xs.push_back(hi);
    return xs;
}

StatSeries selberg_sum(const lfunc::SelbergFunction& F, const PrimeTable& table, const std::vector<double>& checkpoints) {
    if (!checkpoints.empty()) require_range(F, table, checkpoints.back());
    return accumulate(SeriesKind::Selberg, table, checkpoints, [&](std::uint32_t p) {
        return cplx(std::norm(F.a[p]) / p);
    });
}

StatSeries orthogonality_sum(const lfunc::SelbergFunction& F, const lfunc::SelbergFunction& G, const PrimeTable& table,
                             const std::vector<double>& checkpoints) {
    if (!checkpoints.empty()) {
        require_range(F, table, checkpoints.back());
        require_range(G, table, checkpoints.back());
    }
    return accumulate(SeriesKind::Orthogonality, table, checkpoints, [&](std::uint32_t p) {
        return F.a[p] * std::conj(G.a[p]) / static_cast<double>(p);
    });
}

double orthogonality_sup(const lfunc::SelbergFunction& F, const lfunc::SelbergFunction& G, const PrimeTable& table,
                         double X) {
    require_range(F, table, X);
    require_range(G, table, X);
    cplx sum = 0.0;
    double sup = 0.0;
    for (std::uint32_t p : table.primes) {
        if (p > X) break;
        sum += F.a[p] * std::conj(G.a[p]) / static_cast<double>(p);
        sup = std::max(sup, std::abs(sum));
    }
    return sup;
}

StatSeries pole_divergence_sum(const lfunc::SelbergFunction& F, double alpha, const PrimeTable& table,
                               const std::vector<double>& checkpoints) {
    if (!checkpoints.empty()) require_range(F, table, checkpoints.back());
    const cplx s(1.0, alpha);
    return accumulate(SeriesKind::PoleDivergence, table, checkpoints, [&](std::uint32_t p) {
        return F.a[p] * std::exp(-s * std::log(static_cast<double>(p)));
    });
}

NFEstimate estimate_nF(const lfunc::SelbergFunction& F, const PrimeTable& table, double X, int count) {
    if (X < 1000.0) throw DomainError("estimate_nF: X must be at least 1000");
    const auto xs = geometric_checkpoints(std::sqrt(X), X, count);
    if (xs.size() < 4) throw DomainError("estimate_nF: degenerate fit, fewer than 4 checkpoints");
    auto series = selberg_sum(F, table, xs);
    const std::size_t n = xs.size();
    double mx = 0, my = 0;
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::log(std::log(xs[i]));
        v[i] = series.partial_sums[i].real();
        mx += u[i];
        my += v[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (u[i] - mx) * (u[i] - mx);
        sxy += (u[i] - mx) * (v[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) ss += std::pow(v[i] - (intercept + slope * u[i]), 2);
    const long nearest = std::lround(slope);
    return {slope, intercept, nearest, std::abs(slope - static_cast<double>(nearest)), std::sqrt(ss / n), std::move(series)};
}

AdditivityReport nF_additivity_check(const std::vector<Factor>& factors, const PrimeTable& table, double X) {
    if (factors.empty()) throw DomainError("nF_additivity_check: no factors");
    int target = 0;
    const lfunc::SelbergFunction* first = nullptr;
    lfunc::SelbergFunction prod;
    bool have = false;
    for (const auto& f : factors) {
        if (f.exponent < 1) throw DomainError("nF_additivity_check: exponents must be positive");
        target += f.exponent * f.exponent;
        for (int k = 0; k < f.exponent; ++k) {
            if (!have) {
                prod = *f.F;
                have = true;
            } else {
                prod = lfunc::product(prod, *f.F);
            }
        }
        if (!first) first = f.F;
    }
    double err = 0.0;
    std::uint32_t checked = 0;
    for (std::uint32_t p : table.primes) {
        if (p > X) break;
        cplx expect = 0.0;
        for (const auto& f : factors) expect += static_cast<double>(f.exponent) * f.F->a[p];
        err = std::max(err, std::abs(prod.a[p] - expect));
        ++checked;
    }
    return {target, estimate_nF(prod, table, X), err, checked};
}

}  // namespace selberg::stats
