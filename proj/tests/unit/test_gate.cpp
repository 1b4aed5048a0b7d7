#include <doctest.h>

#include <cmath>
#include <random>

#include "selberg/gate.hpp"
#include "selberg/lfunc.hpp"

using namespace selberg;
using namespace selberg::gate;

TEST_CASE("decay exponent tracks d - 1 for a single gamma factor") {
    // Γ(w s + 1/4) has degree 2w and no poles at s = -n for these w.
    for (double w : {0.25, 0.5, 1.0}) {
        const lfunc::GammaFactor g{1.0, 1.0, {{w, 0.25}}};
        const auto prof = k_decay_profile(g, 400);
        const double d = 2 * w;
        CAPTURE(w);
        CHECK(std::abs(decay_exponent(prof) - (d - 1)) < 0.05);
    }
    // Γ(s/2 + 1/4) Γ(s/4): degree 3/2
    const lfunc::GammaFactor g{1.0, 0.7, {{0.5, 0.25}, {0.25, 0.0}}};
    CHECK(std::abs(decay_exponent(k_decay_profile(g, 400)) - 0.5) < 0.05);
}

TEST_CASE("decay profile excludes poles of gamma at negative integers") {
    // Γ(s/2): γ(-n) is a pole for even n, so those n are excluded.
    const lfunc::GammaFactor g{1.0, 1.0, {{0.5, 0.0}}};
    const auto prof = k_decay_profile(g, 10);
    for (std::size_t i = 0; i < prof.n.size(); ++i) {
        if (prof.n[i] % 2 == 0) {
            CHECK(std::isinf(prof.log_ratio[i]));
            CHECK_FALSE(prof.reason[i].empty());
        } else {
            CHECK(std::isfinite(prof.log_ratio[i]));
        }
    }
    CHECK_THROWS(decay_exponent(k_decay_profile(g, 20)));
}

TEST_CASE("roots round trip") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> N01;
    for (int r = 1; r <= 6; ++r) {
        std::vector<cplx> R;
        for (int i = 0; i < r; ++i) R.emplace_back(N01(rng), N01(rng));
        const auto P = expand_roots(R);
        const auto f = local_roots(P, 2);
        REQUIRE(f.roots.size() == static_cast<std::size_t>(r));
        CHECK(f.residual < 1e-10);
        for (const cplx& x : R) {
            double best = 1e300;
            for (const cplx& y : f.roots) best = std::min(best, std::abs(x - y));
            CHECK(best < 1e-7);
        }
    }
    // P(x) = 1 - x^2 has inverse roots ±1
    const auto f = local_roots({1.0, 0.0, -1.0});
    CHECK(f.roots.size() == 2);
    CHECK(std::abs(std::abs(f.roots[0]) - 1.0) < 1e-12);
    CHECK(std::abs(f.roots[0] + f.roots[1]) < 1e-12);
}

TEST_CASE("B_j growth: the corrected estimator removes the j^{-1/j} bias") {
    const auto f = local_roots(expand_roots({2.0, 0.5}));
    const auto g = bj_growth(f, 60);
    CHECK(g.dominant);
    CHECK(std::abs(g.max_modulus - 2.0) < 1e-12);
    CHECK(std::abs(g.limsup - 2.0) < 1e-9);
    CHECK(g.limsup_raw < 1.99);
    CHECK(g.limsup_raw > 1.8);  // 2 · 60^{-1/60}
    // B_j = -Σ R^j / j
    CHECK(std::abs(g.B[2] - (-(8.0 + 0.125) / 3.0)) < 1e-12);

    const auto tie = bj_growth(local_roots({1.0, 0.0, -4.0}), 40);
    CHECK_FALSE(tie.dominant);
    // B_j vanishes for odd j; even j give 2 · 2^{1/j}
    CHECK(tie.limsup > 2.0);
    CHECK(tie.limsup < 2.05);
}

TEST_CASE("theta requirement") {
    const auto v = theta_requirement(local_roots({1.0, -2.0}, 2), 2);
    CHECK(std::abs(v.theta - 1.0) < 1e-12);
    CHECK_FALSE(v.admissible);
    const auto z = theta_requirement(local_roots({1.0, -1.0}, 3), 3);
    CHECK(std::abs(z.theta) < 1e-12);
    CHECK(z.admissible);
    // |R| = p^{0.49}
    const double R = std::pow(5.0, 0.49);
    CHECK(theta_requirement(local_roots({1.0, -R}, 5), 5).admissible);
}

TEST_CASE("degree zero constraints") {
    const auto one = degree_zero_constraints(1.0, {1.0});
    CHECK(one.q_squared_integral);
    CHECK(one.consistent);
    CHECK(one.accepted);

    // Q = √2 with |a_2| = √2 is consistent but forces θ = 1/2.
    const double r2 = std::sqrt(2.0);
    const auto half = degree_zero_constraints(r2, {1.0, cplx(0.0, r2)});
    CHECK(half.q_squared == 2);
    CHECK(half.leading_modulus_ok);
    CHECK(half.consistent);
    REQUIRE(half.prime_checks.size() == 1);
    CHECK(std::abs(half.prime_checks[0].verdict.theta - 0.5) < 1e-12);
    CHECK_FALSE(half.accepted);

    const auto frac = degree_zero_constraints(1.5, {1.0});
    CHECK_FALSE(frac.q_squared_integral);
    CHECK_FALSE(frac.accepted);

    const auto supp = degree_zero_constraints(1.0, {1.0, 0.0, 0.5});
    CHECK(supp.support_violations == std::vector<std::uint64_t>{3});
    CHECK_FALSE(supp.accepted);

    const auto lead = degree_zero_constraints(r2, {1.0, 1.0});
    CHECK_FALSE(lead.leading_modulus_ok);
    CHECK_FALSE(lead.accepted);
}

TEST_CASE("conductor lower-bound probe") {
    const auto z = lfunc::make_zeta(10);
    CHECK(q_lower_bound_probe(*z.gamma).status == QBound::Boundary);
    const lfunc::GammaFactor above{1.0, std::sqrt(5 / kPi), {{0.5, 0.0}}};
    CHECK(q_lower_bound_probe(above).status == QBound::Above);
    const lfunc::GammaFactor below{1.0, 0.1, {{0.5, 0.0}}};
    CHECK(q_lower_bound_probe(below).status == QBound::Below);
    CHECK(std::abs(q_lower_bound_probe(below).bound - 1 / std::sqrt(kPi)) < 1e-15);
    CHECK_THROWS(q_lower_bound_probe(*lfunc::make_delta(10).gamma));
}
