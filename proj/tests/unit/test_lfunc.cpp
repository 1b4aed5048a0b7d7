#include <doctest.h>

#include <cmath>
#include <random>

#include "selberg/characters.hpp"
#include "selberg/lfunc.hpp"
#include "selberg/numtheory.hpp"

using namespace selberg;
using namespace selberg::lfunc;

namespace {

chars::DirichletCharacter nonprincipal(std::uint64_t q, std::size_t idx = 1) {
    return chars::enumerate_characters(q).at(idx);
}

const Accuracy kTight{1e-11, 1e-13, 10'000'000};

}  // namespace

TEST_CASE("builtin gamma data and conductors") {
    const auto z = make_zeta(1000);
    REQUIRE(z.gamma);
    CHECK(z.pole_order == 1);
    CHECK(std::abs(*z.residue - 1.0) == 0.0);
    CHECK(degree(*z.gamma) == 1.0);
    auto cz = conductor(normalize_to_sstar(*z.gamma));
    CHECK(std::abs(cz.q - 1.0) < 1e-12);
    CHECK(cz.integral);

    const auto d = make_delta(1000);
    CHECK(d.pole_order == 0);
    CHECK(degree(*d.gamma) == 2.0);
    const auto sd = normalize_to_sstar(*d.gamma);
    CHECK(sd.d == 2);
    CHECK(std::abs(conductor(sd).q - 1.0) < 1e-12);

    for (std::uint64_t q : {3ULL, 4ULL, 5ULL, 7ULL, 8ULL, 11ULL}) {
        for (const auto& chi : chars::enumerate_characters(q)) {
            const auto L = make_dirichlet(chi, 100);
            if (!chi.primitive()) {
                CHECK_FALSE(L.gamma.has_value());
                continue;
            }
            auto c = conductor(normalize_to_sstar(*L.gamma));
            CHECK(std::abs(c.q - static_cast<double>(q)) < 1e-9 * q);
            CHECK(c.integral);
        }
    }
}

TEST_CASE("normalization changes gamma only by a constant factor") {
    // Γ(ks/2 + μ) -> product of Γ(s/2 + ·): the ratio of the two gamma factors
    // must not depend on s.
    GammaFactor g{std::polar(1.0, 0.3), 0.7, {{1.5, {0.25, 0.4}}, {1.0, {0.5, 0.0}}, {0.5, {0.1, -0.2}}}};
    const GammaFactor n = normalized_gamma(g);
    CHECK(n.factors.size() == 6);
    for (const auto& f : n.factors) CHECK(f.w == 0.5);
    const cplx r0 = log_gamma_factor(g, {0.3, 0.2}) - log_gamma_factor(n, {0.3, 0.2});
    for (cplx s : {cplx(1.7, -3.0), cplx(2.5, 10.0), cplx(0.9, 25.0)}) {
        cplx r = log_gamma_factor(g, s) - log_gamma_factor(n, s);
        const double turns = std::round((r - r0).imag() / (2 * kPi));
        r -= cplx(0.0, 2 * kPi * turns);
        CHECK(std::abs(r - r0) < 1e-10);
    }
    CHECK_THROWS_AS(normalized_gamma(GammaFactor{1.0, 1.0, {{0.3, 0.0}}}), DomainError);
    CHECK_THROWS_AS((GammaFactor{1.0, 1.0, {{0.5, {-0.1, 0.0}}}}.validate()), DomainError);
}

TEST_CASE("dirichlet_eval against closed forms") {
    const auto z = make_zeta(400000);
    CHECK(std::abs(dirichlet_eval(z, 4.0, kTight).value - std::pow(kPi, 4) / 90) < 1e-10);
    CHECK(std::abs(dirichlet_eval(z, 2.0, Accuracy{1e-3, 1e-13, 10'000}).value - kPi * kPi / 6) < 1e-3);
    // L(3, χ_4) = π^3/32
    const auto L4 = make_dirichlet(nonprincipal(4), 400000);
    CHECK(std::abs(dirichlet_eval(L4, 3.0, kTight).value - std::pow(kPi, 3) / 32) < 1e-10);
    // Euler product at s = 3
    cplx prod = 1.0;
    for (auto p : nt::primes_up_to(20000)) prod *= 1.0 / (1.0 - std::pow(static_cast<double>(p), -3.0));
    CHECK(std::abs(dirichlet_eval(z, 3.0, kTight).value - prod) < 1e-8);
}

TEST_CASE("dirichlet_eval refuses outside the certified region") {
    const auto z = make_zeta(1000);
    CHECK_THROWS_AS(dirichlet_eval(z, 1.0005, kTight), DomainError);
    CHECK_THROWS_AS(dirichlet_eval(z, 1.2, kTight), AccuracyError);
}

TEST_CASE("parallel dirichlet_eval matches the serial reference") {
    const auto d = make_delta(100000);
    const Accuracy acc{1e-9, 1e-13, 100'000};
    for (cplx s : {cplx(4.0, 0.0), cplx(4.5, 14.0), cplx(5.0, -7.5)}) {
        const auto a = dirichlet_eval(d, s, acc);
        const auto b = reference::dirichlet_eval_serial(d, s, acc);
        CHECK(a.terms == b.terms);
        CHECK(std::abs(a.value - b.value) < 1e-13 * std::max(1.0, std::abs(b.value)));
    }
}

TEST_CASE("product, twist and conjugate") {
    const std::size_t N = 5000;
    const auto z = make_zeta(N);
    const auto z2 = product(z, z);
    const auto dn = nt::divisor_counts(static_cast<std::uint32_t>(N));
    for (std::size_t n = 1; n <= N; ++n) CHECK(z2.a[n] == cplx(dn[n]));
    CHECK(z2.pole_order == 2);
    CHECK(degree(*z2.gamma) == 2.0);

    const auto chi = nonprincipal(4);
    const auto t = twist(z, chi);
    CHECK_FALSE(t.gamma.has_value());
    for (std::size_t n = 1; n <= 100; ++n) CHECK(t.a[n] == chi(n));

    const auto chi5 = nonprincipal(5);  // complex, order 4
    const auto L = make_dirichlet(chi5, 100);
    const auto Lb = conjugate(L);
    for (std::size_t n = 1; n <= 100; ++n) CHECK(Lb.a[n] == std::conj(L.a[n]));
    CHECK(std::abs(Lb.gamma->epsilon - std::conj(L.gamma->epsilon)) < 1e-15);
}

TEST_CASE("root number of a primitive character has modulus one and matches the Gauss sum") {
    for (std::uint64_t q : {5ULL, 7ULL, 12ULL, 13ULL}) {
        for (const auto& chi : chars::enumerate_characters(q)) {
            if (!chi.primitive()) continue;
            const auto L = make_dirichlet(chi, 10);
            const cplx tau = chars::gauss_sum(chi).tau;
            const cplx W = tau / (std::pow(cplx(0, 1), chi.parity()) * std::sqrt(double(q)));
            CHECK(std::abs(std::abs(L.gamma->epsilon) - 1.0) < 1e-12);
            CHECK(std::abs(L.gamma->epsilon * L.gamma->epsilon - std::conj(W)) < 1e-12);
        }
    }
}

TEST_CASE("multiplicativity check") {
    auto a = make_zeta(200).a;
    CHECK(multiplicativity_check(a, 200).ok());
    a[6] = 2.0;
    const auto rep = multiplicativity_check(a, 200);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front() == std::pair<std::uint64_t, std::uint64_t>{2, 3});
    CHECK(multiplicativity_check(make_delta(2000).a, 2000, 1e-9).ok());
}

TEST_CASE("formal log and Euler log coefficients") {
    const auto L = formal_log({1.0, -1.0}, 8);
    for (int j = 1; j <= 8; ++j) CHECK(std::abs(L[j - 1] + 1.0 / j) < 1e-15);

    // reconstruction route from a_{2^k}: ζ gives b_{2^j} = 1/j
    auto zf = make_explicit(std::vector<cplx>(1024, 1.0), std::nullopt);
    const auto b = euler_log_coeffs(zf, 2, 8);
    for (int j = 1; j <= 8; ++j) CHECK(std::abs(b[j - 1] - 1.0 / j) < 1e-13);
    CHECK_THROWS_AS(euler_log_coeffs(make_explicit(std::vector<cplx>(4, 1.0), std::nullopt), 3, 2),
                    NotFoundError);
}

TEST_CASE("Euler log coefficients equal power sums of the inverse roots") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = 1 + trial % 4;
        std::vector<cplx> roots;
        for (int i = 0; i < r; ++i) roots.emplace_back(U(rng), U(rng));
        // P(x) = Π (1 - R x), built here independently of the library.
        std::vector<cplx> P{1.0};
        for (const cplx& R : roots) {
            P.push_back(0.0);
            for (std::size_t k = P.size() - 1; k >= 1; --k) P[k] -= R * P[k - 1];
        }
        const auto F = make_euler({{3, LocalPoly{P, true}}}, EulerDefault::Zeta, 500, std::nullopt);
        const int J = 30;
        const auto b = euler_log_coeffs(F, 3, J);
        for (int j = 1; j <= J; ++j) {
            cplx s = 0.0;
            for (const cplx& R : roots) s += std::pow(R, j);
            s /= static_cast<double>(j);
            CHECK(std::abs(b[j - 1] - s) < 1e-10);
        }
    }
}

TEST_CASE("Euler products realize multiplicative coefficients") {
    const auto F = make_euler({{2, LocalPoly{{1.0, 0.5}, true}}, {5, LocalPoly{{1.0, -0.3, 0.2}, false}}},
                              EulerDefault::One, 400, std::nullopt);
    CHECK(multiplicativity_check(F.a, 400).ok());
    CHECK(std::abs(F.a[4] - 0.25) < 1e-15);   // 1/(1 + x/2) = 1 - x/2 + x^2/4
    CHECK(std::abs(F.a[25] - 0.2) < 1e-15);
    CHECK(F.a[125] == 0.0);
    CHECK(F.a[3] == 0.0);
    CHECK(std::abs(F.a[50] - (-0.5 * 0.2)) < 1e-15);
}

TEST_CASE("trivial zeros") {
    const auto z = make_zeta(10);
    const auto tz = trivial_zeros(*z.gamma, z.pole_order, -10.5, 0.5);
    REQUIRE(tz.size() == 5);
    for (int k = 0; k < 5; ++k) {
        CHECK(std::abs(tz[k].location + 2.0 * (k + 1)) < 1e-12);
        CHECK(tz[k].order == 1);
    }
    const auto d = make_delta(10);
    const auto td = trivial_zeros(*d.gamma, 0, -9.0, 0.5);
    REQUIRE(td.size() == 4);
    CHECK(std::abs(td[0].location + 5.5) < 1e-12);
    // Γ(s/2)^2: double zero at the even negative integers, pole order 1 leaves order 1 at 0
    GammaFactor g2{1.0, 1.0, {{0.5, 0.0}, {0.5, 0.0}}};
    const auto t2 = trivial_zeros(g2, 1, -4.5, 0.5);
    REQUIRE(t2.size() == 3);
    CHECK(std::abs(t2[0].location) < 1e-12);
    CHECK(t2[0].order == 1);
    CHECK(t2[1].order == 2);
}

TEST_CASE("axiom audit") {
    CHECK(axiom_audit(make_zeta(5000)).passed());
    CHECK(axiom_audit(make_delta(5000)).passed());
    auto bad = make_explicit({2.0, 1.0, 1.0}, std::nullopt);
    const auto rep = axiom_audit(bad);
    CHECK_FALSE(rep.passed());
    CHECK_FALSE(rep.items.front().passed);

    auto euler_bad = make_euler({{2, LocalPoly{{1.0, -2.0}, false}}}, EulerDefault::One, 512, std::nullopt);
    CHECK_FALSE(axiom_audit(euler_bad).passed());
}
