#include <doctest.h>

#include <cmath>
#include <complex>

#include "selberg/characters.hpp"
#include "selberg/numtheory.hpp"

using namespace selberg;
using namespace selberg::chars;

namespace {

// e(x) = exp(2πix), straight from the definition.
cplx e(double x) { return std::polar(1.0, 2 * kPi * x); }

// Smallest d | q such that chi is trivial on units ≡ 1 mod d, by brute force
// over residue classes; independent of the library's loop structure.
std::uint64_t brute_conductor(const DirichletCharacter& chi) {
    const auto q = chi.modulus();
    for (std::uint64_t d = 1; d <= q; ++d) {
        if (q % d) continue;
        bool ok = true;
        for (std::uint64_t n = 1; n <= q && ok; ++n)
            if (nt::gcd(n, q) == 1 && n % d == 1 % d && std::abs(chi(n) - 1.0) > 1e-12) ok = false;
        if (ok) return d;
    }
    return q;
}

}  // namespace

TEST_CASE("enumeration sizes and examples") {
    auto one = enumerate_characters(1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0](5) - 1.0) < 1e-15);

    auto four = enumerate_characters(4);
    REQUIRE(four.size() == 2);
    CHECK(four[0].principal());
    CHECK(std::abs(four[1](1) - 1.0) < 1e-15);
    CHECK(std::abs(four[1](2)) == 0.0);
    CHECK(std::abs(four[1](3) + 1.0) < 1e-15);
    CHECK(std::abs(four[1](4)) == 0.0);

    CHECK(enumerate_characters(8).size() == 4);
    for (std::uint64_t q = 1; q <= 60; ++q) {
        auto all = enumerate_characters(q);
        CHECK(all.size() == nt::euler_phi(q));
        CHECK(all.front().principal());
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
    }
    CHECK_THROWS_AS(enumerate_characters(0), DomainError);
}

TEST_CASE("orthogonality for q <= 40") {
    for (std::uint64_t q = 1; q <= 40; ++q) {
        auto all = enumerate_characters(q);
        const double phi = static_cast<double>(nt::euler_phi(q));
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = 0; j < all.size(); ++j) {
                cplx s = 0.0;
                for (std::uint64_t n = 0; n < q; ++n) s += all[i](n) * std::conj(all[j](n));
                CHECK(std::abs(s - (i == j ? phi : 0.0)) < 1e-10);
            }
    }
}

TEST_CASE("table invariants") {
    for (std::uint64_t q : {5u, 12u, 16u, 27u, 45u, 64u, 100u}) {
        const auto lam = nt::carmichael_lambda(q);
        for (const auto& chi : enumerate_characters(q)) {
            for (std::uint64_t n = 0; n < q; ++n) {
                CHECK((std::abs(chi(n)) == 0.0) == (nt::gcd(n, q) != 1));
                if (nt::gcd(n, q) == 1) CHECK(std::abs(std::pow(chi(n), static_cast<double>(lam)) - 1.0) < 1e-9);
                for (std::uint64_t m = 0; m < q; ++m)
                    CHECK(std::abs(chi(m * n % q) - chi(m) * chi(n)) < 1e-12);
            }
            CHECK(std::abs(chi(q - 1) - (chi.parity() ? -1.0 : 1.0)) < 1e-12);
        }
    }
}

TEST_CASE("conductors match brute force and lift back") {
    auto twelve = enumerate_characters(12);
    auto info = conductor_and_primitivity(twelve[0]);
    CHECK(info.conductor == 1);

    auto three = enumerate_characters(3);
    auto six = lift(three[1], 6);
    auto inf6 = conductor_and_primitivity(six);
    CHECK(inf6.conductor == 3);
    CHECK_FALSE(inf6.primitive);
    CHECK(inf6.inducing == three[1]);

    auto chi4 = enumerate_characters(4)[1];
    CHECK(conductor_and_primitivity(chi4).conductor == 4);
    CHECK(conductor_and_primitivity(chi4).primitive);

    for (std::uint64_t q = 1; q <= 72; ++q)
        for (const auto& chi : enumerate_characters(q)) {
            auto ci = conductor_and_primitivity(chi);
            CHECK(ci.conductor == brute_conductor(chi));
            CHECK(ci.inducing.primitive());
            CHECK(lift(ci.inducing, q) == chi);
        }
}

TEST_CASE("Gauss sums") {
    auto chi3 = enumerate_characters(3)[1];
    auto g3 = gauss_sum(chi3);
    CHECK(std::abs(g3.tau - (e(1.0 / 3) - e(2.0 / 3))) < 1e-14);
    CHECK(std::abs(g3.tau - cplx(0, std::sqrt(3.0))) < 1e-14);
    auto chi4 = enumerate_characters(4)[1];
    CHECK(std::abs(gauss_sum(chi4).tau - cplx(0, 2)) < 1e-14);
    CHECK(std::abs(gauss_sum(chi4).root_number - 1.0) < 1e-14);

    for (std::uint64_t q = 1; q <= 50; ++q)
        for (const auto& chi : enumerate_characters(q)) {
            if (!chi.primitive()) {
                CHECK_THROWS_AS(gauss_sum(chi), DomainError);
                continue;
            }
            cplx direct = 0.0;
            for (std::uint64_t n = 0; n < q; ++n) direct += chi(n) * e(static_cast<double>(n) / q);
            const auto g = gauss_sum(chi);
            CHECK(std::abs(g.tau - direct) < 1e-11);
            CHECK(std::abs(std::abs(g.tau) - std::sqrt(static_cast<double>(q))) < 1e-11);
            CHECK(std::abs(std::abs(g.root_number) - 1.0) < 1e-12);
        }
}

TEST_CASE("conjugate and order") {
    for (const auto& chi : enumerate_characters(35)) {
        auto c = chi.conj();
        for (std::uint64_t n = 0; n < 35; ++n) CHECK(std::abs(c(n) - std::conj(chi(n))) < 1e-14);
        for (std::uint64_t n = 0; n < 35; ++n)
            if (nt::gcd(n, 35) == 1) CHECK(std::abs(std::pow(chi(n), static_cast<double>(chi.order())) - 1.0) < 1e-10);
    }
}

TEST_CASE("detect_character") {
    auto chi5 = enumerate_characters(5)[2];
    std::map<std::uint64_t, cplx> table;
    for (std::uint64_t n = 1; n <= 30; ++n) table[n] = chi5(n);
    CHECK(detect_character(table, 5) == chi5);

    std::map<std::uint64_t, cplx> ones;
    for (std::uint64_t n = 1; n <= 36; ++n) ones[n] = 1.0;
    auto p6 = detect_character(ones, 6);
    CHECK(p6.principal());
    CHECK(p6.modulus() == 6);

    auto bad = table;
    bad[2] = 2.0;
    bad[7] = 2.0;
    bad[12] = 2.0;
    bad[17] = 2.0;
    bad[22] = 2.0;
    bad[27] = 2.0;
    CHECK_THROWS_AS(detect_character(bad, 5), NotFoundError);

    auto aperiodic = table;
    aperiodic[8] = -aperiodic[8];
    CHECK_THROWS_AS(detect_character(aperiodic, 5), NotFoundError);

    // Periodic roots of unity, but not multiplicative.
    std::map<std::uint64_t, cplx> nonmult;
    for (std::uint64_t n = 1; n <= 49; ++n) nonmult[n] = (n % 7 == 0) ? 0.0 : (n % 7 == 3 ? -1.0 : 1.0);
    CHECK_THROWS_AS(detect_character(nonmult, 7), NotFoundError);

    std::map<std::uint64_t, cplx> short_range;
    for (std::uint64_t n = 1; n <= 10; ++n) short_range[n] = chi5(n);
    CHECK_THROWS_AS(detect_character(short_range, 5), DomainError);

    for (std::uint64_t q : {8u, 9u, 15u, 16u})
        for (const auto& chi : enumerate_characters(q)) {
            std::map<std::uint64_t, cplx> t;
            for (std::uint64_t n = 1; n <= q * q + q; ++n) t[n] = chi(n);
            CHECK(detect_character(t, q) == chi);
        }
}
