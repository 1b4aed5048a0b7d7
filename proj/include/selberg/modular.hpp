#pragma once

// Ramanujan's τ from the q-expansion of Δ = q Π (1 - q^n)^24.

#include <cstddef>
#include <string>
#include <vector>

namespace selberg::modular {

using i128 = __int128;

/// τ(0..N) with τ(0) = 0. η^3 by Jacobi's identity, η^6 by a sparse exact
/// product, then two squarings by NTT modulo four primes recombined by CRT.
/// The four residue pipelines run as an OpenMP loop.
std::vector<i128> ramanujan_tau(std::size_t N);

/// τ(n) / n^{11/2} for n = 0..N (entry 0 is 0).
std::vector<double> delta_normalized(std::size_t N);

std::string to_string(i128 v);

namespace reference {
/// Direct expansion of q Π (1 - q^n)^24 in 128-bit integers, O(N^2).
std::vector<i128> ramanujan_tau_naive(std::size_t N);
}  // namespace reference

}  // namespace selberg::modular
