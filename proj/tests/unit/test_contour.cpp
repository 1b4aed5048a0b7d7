#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "selberg/characters.hpp"
#include "selberg/contour.hpp"
#include "selberg/lfunc.hpp"

using namespace selberg;
using namespace selberg::lfunc;

namespace {

// γ = π^{-s/2} Γ(s/2) inverts to W(y) = 2 e^{-π y²}.
double zeta_theta(double x) {
    double s = 0.0;
    for (int n = 1; n < 200; ++n) {
        const double t = 2.0 * std::exp(-kPi * n * n * x * x);
        s += t;
        if (t < 1e-300) break;
    }
    return s;
}

const Accuracy kAcc{1e-12, 1e-12, 1'000'000};

}  // namespace

TEST_CASE("inverse Mellin of the zeta completion is the theta series") {
    const auto z = make_zeta(2000);
    for (double x : {0.6, 0.8, 1.0, 1.3, 2.0}) {
        const auto r = inverse_mellin_phi(z, x, kAcc);
        const double ref = zeta_theta(x);
        CHECK(std::abs(r.value - ref) < 1e-10);
        CHECK(r.error_bound < 1e-9);
    }
}

TEST_CASE("gamma kernel matches the exponential closed form") {
    const GammaFactor g{1.0, 1.0 / std::sqrt(kPi), {{0.5, 0.0}}};
    for (double y : {0.5, 1.0, 1.7}) CHECK(std::abs(gamma_kernel(g, y, kAcc) - 2.0 * std::exp(-kPi * y * y)) < 1e-10);
    // Γ(s) alone: W(y) = e^{-y}
    const GammaFactor e{1.0, 1.0, {{1.0, 0.0}}};
    for (double y : {0.3, 1.0, 3.0}) CHECK(std::abs(gamma_kernel(e, y, kAcc) - std::exp(-y)) < 1e-10);
}

TEST_CASE("two routes to S_F agree for a character and for Delta") {
    const auto chi = chars::enumerate_characters(5).at(1);
    const auto L = make_dirichlet(chi, 4000);
    const auto d = make_delta(4000);
    for (double x : {0.8, 1.0, 1.25}) {
        CHECK(std::abs(inverse_mellin_phi(L, x, kAcc).value - theta_series(L, x, kAcc)) < 1e-9);
        CHECK(std::abs(inverse_mellin_phi(d, x, kAcc).value - theta_series(d, x, kAcc)) < 1e-9);
    }
}

TEST_CASE("functional-equation residual is small for genuine data") {
    const auto z = make_zeta(4000);
    for (double x : {0.7, 1.0, 1.4}) CHECK(std::abs(fe_residual(z, x, kAcc)) < 1e-8);
    for (std::uint64_t q : {3ULL, 5ULL, 8ULL}) {
        for (const auto& chi : chars::enumerate_characters(q)) {
            if (!chi.primitive()) continue;
            const auto L = make_dirichlet(chi, 4000);
            for (double x : {0.7, 1.4}) CHECK(std::abs(fe_residual(L, x, kAcc)) < 1e-8);
        }
    }
    const auto d = make_delta(4000);
    CHECK(std::abs(fe_residual(d, 0.8, kAcc)) < 1e-8);
}

TEST_CASE("a rotated root number breaks the functional equation") {
    auto L = make_dirichlet(chars::enumerate_characters(5).at(1), 4000);
    L.gamma->epsilon *= std::polar(1.0, 0.5);
    CHECK(std::abs(fe_residual(L, 0.7, kAcc)) > 1e-3);

    auto z = make_zeta(4000);
    z.residue = 1.1;
    CHECK(std::abs(fe_residual(z, 0.7, kAcc)) > 1e-3);
}

TEST_CASE("residue term for zeta") {
    const auto z = make_zeta(10);
    // γ(1) = π^{-1/2} Γ(1/2) = 1, ρ = 1: R(x) = 1/x - 1
    for (double x : {0.5, 1.0, 2.0}) CHECK(std::abs(residue_term(z, x) - (1.0 / x - 1.0)) < 1e-14);
    CHECK(residue_term(make_delta(10), 0.5) == cplx(0.0));
}

TEST_CASE("inverse Mellin is deterministic across thread counts") {
    const auto d = make_delta(4000);
    const auto ref = reference::inverse_mellin_phi_serial(d, 0.9, kAcc);
    const int saved = omp_get_max_threads();
    for (int t : {1, 2, 3, 8}) {
        omp_set_num_threads(t);
        const auto r = inverse_mellin_phi(d, 0.9, kAcc);
        CHECK(r.terms == ref.terms);
        CHECK(r.value == inverse_mellin_phi(d, 0.9, kAcc).value);
        CHECK(std::abs(r.value - ref.value) < 1e-14 * std::max(1.0, std::abs(ref.value)));
    }
    omp_set_num_threads(saved);
}

TEST_CASE("degree zero has no vertical-line inverse") {
    const auto F = make_explicit({1.0, 1.0}, GammaFactor{1.0, 1.0, {}});
    CHECK_THROWS_AS(inverse_mellin_phi(F, 1.0, kAcc), AccuracyError);
    CHECK_THROWS_AS(fe_residual(F, 1.0, kAcc), AccuracyError);
}
