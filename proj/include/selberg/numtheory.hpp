#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace selberg::nt {

using u64 = std::uint64_t;

u64 gcd(u64 a, u64 b);
u64 powmod(u64 base, u64 exp, u64 mod);

/// Prime factorisation by trial division, ascending primes with exponents.
std::vector<std::pair<u64, int>> factorize(u64 n);
std::vector<u64> divisors(u64 n);  // ascending
u64 euler_phi(u64 n);
/// Exponent of (Z/n)^*.
u64 carmichael_lambda(u64 n);
u64 lcm(u64 a, u64 b);
bool is_prime(u64 n);

/// Smallest-prime-factor table spf[0..n] (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n);

/// Primes <= limit. Segmented Eratosthenes; segments run under OpenMP.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Divisor-count table d(0..n) (d(0) = 0).
std::vector<std::uint32_t> divisor_counts(std::uint32_t n);

/// Smallest C with d(n) <= C n^eps for all n >= 1 (product over primes of
/// max_k (k+1)/p^{k eps}). Requires 0 < eps.
double divisor_bound_constant(double eps);

namespace reference {
/// Plain Eratosthenes over a byte array.
std::vector<std::uint32_t> primes_up_to_serial(std::uint32_t limit);
/// Linear (Euler) sieve; independent second method used for cross-checks.
std::vector<std::uint32_t> primes_up_to_linear(std::uint32_t limit);
}  // namespace reference

}  // namespace selberg::nt
