#pragma once

#include <complex>
#include <cstddef>

#include "selberg/errors.hpp"

namespace selberg {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Tolerance contract carried by every certified evaluation.
struct Accuracy {
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
    std::size_t max_terms = 1'000'000;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_terms < 1)
            throw DomainError("Accuracy: tolerances must be positive and max_terms >= 1");
    }

    Accuracy with_abs(double a) const { Accuracy r = *this; r.abs_tol = a; return r; }
    Accuracy with_rel(double t) const { Accuracy r = *this; r.rel_tol = t; return r; }
    Accuracy with_max_terms(std::size_t n) const { Accuracy r = *this; r.max_terms = n; return r; }
};

}  // namespace selberg
