#pragma once

#include <cmath>
#include <vector>

#include "selberg/accuracy.hpp"

namespace selberg::quad {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n);

    /// Composite rule over [a, b] split into `panels` equal pieces.
    template <class F>
    auto integrate(F&& f, double a, double b, int panels = 1) const -> decltype(f(a)) {
        using R = decltype(f(a));
        R total{};
        const double width = (b - a) / panels;
        for (int p = 0; p < panels; ++p) {
            const double lo = a + p * width;
            const double mid = lo + 0.5 * width;
            const double half = 0.5 * width;
            R s{};
            for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
            total += half * s;
        }
        return total;
    }
};

/// Shared 20-point rule.
const GaussLegendre& gl20();

}  // namespace selberg::quad
