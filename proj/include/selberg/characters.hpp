#pragma once

// Dirichlet characters mod q built from the CRT decomposition of (Z/q)^*.
// Values are held exactly as exponents k with χ(n) = e(k / λ(q)), λ the
// Carmichael exponent; the complex table is rendered from them.

#include <cstdint>
#include <map>
#include <vector>

#include "selberg/accuracy.hpp"

namespace selberg::chars {

class DirichletCharacter {
public:
    /// Exponent marking n with gcd(n, q) > 1.
    static constexpr std::int64_t kZero = -1;

    /// Builds from exponents over denominator carmichael_lambda(modulus);
    /// validates the invariants and derives parity and conductor.
    static DirichletCharacter from_exponents(std::uint64_t modulus, std::vector<std::int64_t> exponents);

    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t denominator() const noexcept { return denominator_; }
    std::uint64_t conductor() const noexcept { return conductor_; }
    int parity() const noexcept { return parity_; }
    bool primitive() const noexcept { return conductor_ == modulus_; }
    bool principal() const;

    /// Exact exponent of χ(n) (kZero when gcd(n, q) > 1).
    std::int64_t exponent(std::uint64_t n) const { return exponents_[n % modulus_]; }
    cplx operator()(std::uint64_t n) const { return values_[n % modulus_]; }
    const std::vector<cplx>& values() const noexcept { return values_; }
    const std::vector<std::int64_t>& exponents() const noexcept { return exponents_; }

    /// Multiplicative order of χ.
    std::uint64_t order() const;

    DirichletCharacter conj() const;

    friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
        return a.modulus_ == b.modulus_ && a.exponents_ == b.exponents_;
    }

private:
    DirichletCharacter() = default;

    std::uint64_t modulus_ = 1;
    std::uint64_t denominator_ = 1;
    std::uint64_t conductor_ = 1;
    int parity_ = 0;
    std::vector<std::int64_t> exponents_;
    std::vector<cplx> values_;
};

/// All φ(q) characters mod q, principal first, ordered lexicographically by
/// their CRT exponent vectors.
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q);

struct ConductorInfo {
    std::uint64_t conductor;
    bool primitive;
    DirichletCharacter inducing;  // primitive character mod conductor
};

ConductorInfo conductor_and_primitivity(const DirichletCharacter& chi);

/// Lift a character mod d to a multiple modulus q (d | q).
DirichletCharacter lift(const DirichletCharacter& chi, std::uint64_t q);

struct GaussSum {
    cplx tau;          // Σ χ(n) e(n/q)
    cplx root_number;  // τ / (i^a √q), unit modulus
};

/// Requires a primitive character.
GaussSum gauss_sum(const DirichletCharacter& chi);

/// Recovers χ mod q from coefficients a_n that are q-periodic and
/// multiplicative on the supplied range (which must contain 1..q²).
/// Throws NotFoundError when no character fits.
DirichletCharacter detect_character(const std::map<std::uint64_t, cplx>& coeffs, std::uint64_t q,
                                    double tol = 1e-9);

}  // namespace selberg::chars
