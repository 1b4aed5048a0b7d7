#include "selberg/characters.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "selberg/numtheory.hpp"

namespace selberg::chars {

namespace {

using nt::u64;

// One cyclic factor of (Z/q)^*, living on the prime-power modulus `pk`.
struct CyclicComponent {
    u64 pk = 1;
    u64 order = 1;
    std::vector<std::int64_t> dlog;  // residue mod pk -> discrete log, -1 if not a unit
};

u64 primitive_root_mod_p(u64 p) {
    if (p == 2) return 1;
    const auto factors = nt::factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (auto [f, k] : factors)
            if (nt::powmod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive root found");
}

std::vector<CyclicComponent> decompose(u64 q) {
    std::vector<CyclicComponent> comps;
    for (auto [p, k] : nt::factorize(q)) {
        u64 pk = 1;
        for (int e = 0; e < k; ++e) pk *= p;
        if (p == 2) {
            if (k == 1) continue;
            if (k == 2) {
                CyclicComponent c{4, 2, std::vector<std::int64_t>(4, -1)};
                c.dlog[1] = 0;
                c.dlog[3] = 1;
                comps.push_back(std::move(c));
                continue;
            }
            // (Z/2^k)^* = <-1> x <5>
            const u64 half = pk / 4;
            CyclicComponent sign{pk, 2, std::vector<std::int64_t>(pk, -1)};
            CyclicComponent five{pk, half, std::vector<std::int64_t>(pk, -1)};
            u64 v = 1;
            for (u64 e = 0; e < half; ++e) {
                sign.dlog[v] = 0;
                five.dlog[v] = static_cast<std::int64_t>(e);
                sign.dlog[pk - v] = 1;
                five.dlog[pk - v] = static_cast<std::int64_t>(e);
                v = v * 5 % pk;
            }
            comps.push_back(std::move(sign));
            comps.push_back(std::move(five));
            continue;
        }
        u64 g = primitive_root_mod_p(p);
        if (k >= 2 && nt::powmod(g, p - 1, p * p) == 1) g += p;
        const u64 order = pk / p * (p - 1);
        CyclicComponent c{pk, order, std::vector<std::int64_t>(pk, -1)};
        u64 v = 1;
        for (u64 e = 0; e < order; ++e) {
            c.dlog[v] = static_cast<std::int64_t>(e);
            v = v * g % pk;
        }
        comps.push_back(std::move(c));
    }
    return comps;
}

std::int64_t pmod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

cplx unit_root(std::int64_t k, u64 denominator) {
    const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(denominator);
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace

DirichletCharacter DirichletCharacter::from_exponents(std::uint64_t modulus, std::vector<std::int64_t> exps) {
    if (modulus == 0) throw DomainError("character modulus must be positive");
    if (exps.size() != modulus) throw DomainError("character table must have q entries");
    const u64 lam = nt::carmichael_lambda(modulus);
    const auto L = static_cast<std::int64_t>(lam);
    std::vector<u64> units;
    for (u64 n = 0; n < modulus; ++n) {
        const bool unit = nt::gcd(n, modulus) == 1;
        if (unit != (exps[n] != kZero))
            throw DomainError("character must vanish exactly on non-units");
        if (unit) {
            if (exps[n] < 0 || exps[n] >= L) throw DomainError("character exponent out of range");
            units.push_back(n);
        }
    }
    if (exps[1 % modulus] != 0) throw DomainError("character must satisfy chi(1) = 1");
    // Complete multiplicativity; exhaustive for small groups, strided otherwise.
    const std::size_t stride = units.size() <= 2048 ? 1 : units.size() / 512 + 1;
    for (std::size_t i = 0; i < units.size(); i += stride)
        for (std::size_t j = i; j < units.size(); j += stride) {
            const u64 mn = units[i] * units[j] % modulus;
            if (pmod(exps[units[i]] + exps[units[j]] - exps[mn], L) != 0)
                throw DomainError("character table is not completely multiplicative");
        }

    DirichletCharacter chi;
    chi.modulus_ = modulus;
    chi.denominator_ = lam;
    chi.exponents_ = std::move(exps);
    chi.values_.resize(modulus);
    for (u64 n = 0; n < modulus; ++n)
        chi.values_[n] = chi.exponents_[n] == kZero ? cplx(0.0) : unit_root(chi.exponents_[n], lam);

    const std::int64_t minus_one = chi.exponents_[(modulus - 1) % modulus];
    chi.parity_ = (minus_one == 0) ? 0 : 1;

    chi.conductor_ = modulus;
    for (u64 d : nt::divisors(modulus)) {
        bool trivial = true;
        for (u64 n = 1 % d == 0 ? d + 1 : 1; n < modulus && trivial; n += d)
            if (n % d == 1 % d && nt::gcd(n, modulus) == 1 && chi.exponents_[n] != 0) trivial = false;
        if (trivial) {
            chi.conductor_ = d;
            break;
        }
    }
    return chi;
}

bool DirichletCharacter::principal() const {
    for (auto e : exponents_)
        if (e != kZero && e != 0) return false;
    return true;
}

std::uint64_t DirichletCharacter::order() const {
    u64 ord = 1;
    for (auto e : exponents_)
        if (e > 0) ord = nt::lcm(ord, denominator_ / nt::gcd(static_cast<u64>(e), denominator_));
    return ord;
}

DirichletCharacter DirichletCharacter::conj() const {
    std::vector<std::int64_t> e(exponents_);
    const auto L = static_cast<std::int64_t>(denominator_);
    for (auto& v : e)
        if (v != kZero) v = pmod(-v, L);
    return from_exponents(modulus_, std::move(e));
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
    if (q == 0) throw DomainError("enumerate_characters: q must be positive");
    const auto comps = decompose(q);
    const u64 lam = nt::carmichael_lambda(q);
    const auto L = static_cast<std::int64_t>(lam);

    // Discrete-log vector of every residue.
    std::vector<std::vector<std::int64_t>> logs(q);
    for (u64 n = 0; n < q; ++n) {
        if (nt::gcd(n, q) != 1) continue;
        for (const auto& c : comps) logs[n].push_back(c.dlog[n % c.pk]);
    }

    std::vector<DirichletCharacter> out;
    std::vector<u64> digits(comps.size(), 0);
    for (;;) {
        std::vector<std::int64_t> exps(q, DirichletCharacter::kZero);
        for (u64 n = 0; n < q; ++n) {
            if (logs[n].empty() && nt::gcd(n, q) != 1) continue;
            std::int64_t k = 0;
            for (std::size_t j = 0; j < comps.size(); ++j)
                k += static_cast<std::int64_t>(digits[j]) * logs[n][j] * (L / static_cast<std::int64_t>(comps[j].order));
            exps[n] = pmod(k, L);
        }
        out.push_back(DirichletCharacter::from_exponents(q, std::move(exps)));

        std::size_t j = 0;
        while (j < digits.size() && ++digits[j] == comps[j].order) digits[j++] = 0;
        if (j == digits.size()) break;
    }
    return out;
}

DirichletCharacter lift(const DirichletCharacter& chi, std::uint64_t q) {
    const u64 d = chi.modulus();
    if (q % d != 0) throw DomainError("lift: target modulus must be a multiple");
    const u64 scale = nt::carmichael_lambda(q) / chi.denominator();
    std::vector<std::int64_t> exps(q, DirichletCharacter::kZero);
    for (u64 n = 0; n < q; ++n)
        if (nt::gcd(n, q) == 1) exps[n] = chi.exponent(n % d) * static_cast<std::int64_t>(scale);
    return DirichletCharacter::from_exponents(q, std::move(exps));
}

ConductorInfo conductor_and_primitivity(const DirichletCharacter& chi) {
    const u64 q = chi.modulus();
    const u64 d = chi.conductor();
    const u64 scale = chi.denominator() / nt::carmichael_lambda(d);
    std::vector<std::int64_t> exps(d, DirichletCharacter::kZero);
    for (u64 m = 0; m < d; ++m) {
        if (nt::gcd(m, d) != 1) continue;
        u64 n = m;
        while (nt::gcd(n, q) != 1) n += d;
        const std::int64_t e = chi.exponent(n);
        if (e % static_cast<std::int64_t>(scale) != 0) throw Error("conductor: inconsistent exponent scaling");
        exps[m] = e / static_cast<std::int64_t>(scale);
    }
    return {d, d == q, DirichletCharacter::from_exponents(d, std::move(exps))};
}

GaussSum gauss_sum(const DirichletCharacter& chi) {
    if (!chi.primitive()) throw DomainError("gauss_sum: character is not primitive");
    const u64 q = chi.modulus();
    const u64 lam = chi.denominator();
    cplx tau = 0.0;
    for (u64 n = 0; n < q; ++n) {
        const std::int64_t e = chi.exponent(n);
        if (e == DirichletCharacter::kZero) continue;
        // e(k/λ + n/q) with the phase reduced exactly before going to floating point.
        const u64 num = (static_cast<u64>(e) * q + n * lam) % (lam * q);
        const double angle = 2.0 * kPi * static_cast<double>(num) / static_cast<double>(lam * q);
        tau += cplx(std::cos(angle), std::sin(angle));
    }
    const cplx ia = chi.parity() == 0 ? cplx(1.0) : cplx(0.0, 1.0);
    return {tau, tau / (ia * std::sqrt(static_cast<double>(q)))};
}

DirichletCharacter detect_character(const std::map<std::uint64_t, cplx>& coeffs, std::uint64_t q, double tol) {
    if (q == 0) throw DomainError("detect_character: q must be positive");
    for (u64 n = 1; n <= q * q; ++n)
        if (!coeffs.count(n)) {
            std::ostringstream os;
            os << "detect_character: coefficient a_" << n << " missing (range must cover 1..q^2)";
            throw DomainError(os.str());
        }
    for (const auto& [n, v] : coeffs) {
        auto it = coeffs.find(n + q);
        if (it != coeffs.end() && std::abs(it->second - v) > tol) {
            std::ostringstream os;
            os << "detect_character: not " << q << "-periodic at n = " << n;
            throw NotFoundError(os.str());
        }
    }

    const u64 lam = nt::carmichael_lambda(q);
    const auto L = static_cast<std::int64_t>(lam);
    std::vector<std::int64_t> exps(q, DirichletCharacter::kZero);
    for (u64 r = 1; r <= q; ++r) {
        if (nt::gcd(r, q) != 1) continue;
        const cplx a = coeffs.at(r);
        const double turns = std::arg(a) / (2.0 * kPi) * static_cast<double>(lam);
        const std::int64_t k = pmod(std::llround(turns), L);
        if (std::abs(a - unit_root(k, lam)) > tol) {
            std::ostringstream os;
            os << "detect_character: a_" << r << " = " << a << " is not a root of unity of order dividing " << lam;
            throw NotFoundError(os.str());
        }
        exps[r % q] = k;
    }

    // a_m a_n = a_{m+rq} a_n = a_{(m+rq)n}, with (m + rq, n) = 1.
    const u64 top = coeffs.rbegin()->first;
    for (u64 m = 1; m <= q; ++m) {
        if (nt::gcd(m, q) != 1) continue;
        for (u64 n = 1; n <= q; ++n) {
            if (nt::gcd(n, q) != 1) continue;
            u64 shifted = m;
            while (nt::gcd(shifted, n) != 1) shifted += q;
            const cplx lhs = coeffs.at(m) * coeffs.at(n);
            cplx rhs;
            if (shifted * n <= top) rhs = coeffs.at(shifted * n);
            else rhs = coeffs.at((m * n - 1) % q + 1);
            if (std::abs(lhs - rhs) > tol) {
                std::ostringstream os;
                os << "detect_character: multiplicativity fails for (" << m << ", " << n << ")";
                throw NotFoundError(os.str());
            }
        }
    }
    try {
        return DirichletCharacter::from_exponents(q, std::move(exps));
    } catch (const DomainError& e) {
        throw NotFoundError(std::string("detect_character: ") + e.what());
    }
}

}  // namespace selberg::chars
