#include "selberg/modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "selberg/errors.hpp"
#include "selberg/numtheory.hpp"

namespace selberg::modular {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr std::array<u32, 4> kPrimes{998244353U, 2013265921U, 1811939329U, 2113929217U};

// Montgomery arithmetic for an odd modulus below 2^31.
struct Montgomery {
    u32 p;
    u32 neg_inv;  // -p^{-1} mod 2^32
    u32 r2;       // 2^64 mod p

    explicit Montgomery(u32 mod) : p(mod) {
        u32 inv = mod;
        for (int i = 0; i < 5; ++i) inv *= 2U - mod * inv;
        neg_inv = 0U - inv;
        r2 = static_cast<u32>((static_cast<unsigned __int128>(1) << 64) % mod);
    }

    u32 reduce(u64 t) const {
        const u32 m = static_cast<u32>(t) * neg_inv;
        const u32 r = static_cast<u32>((t + static_cast<u64>(m) * p) >> 32);
        return r >= p ? r - p : r;
    }
    u32 mul(u32 a, u32 b) const { return reduce(static_cast<u64>(a) * b); }
    u32 to(u32 a) const { return mul(a % p, r2); }
    u32 from(u32 a) const { return reduce(a); }
    u32 add(u32 a, u32 b) const {
        const u32 s = a + b;
        return s >= p ? s - p : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
    u32 pow(u32 a, u64 e) const {
        u32 r = to(1);
        while (e) {
            if (e & 1U) r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
};

u32 generator(u32 p) {
    const auto factors = nt::factorize(p - 1);
    for (u32 g = 2;; ++g) {
        bool ok = true;
        for (auto [f, k] : factors)
            if (nt::powmod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

// Forward transform, decimation in frequency: natural order in, bit-reversed
// out. The inverse is decimation in time from bit-reversed order, so the
// pointwise product never needs a permutation pass.
void ntt_forward(std::vector<u32>& a, const Montgomery& mg, u32 g) {
    const std::size_t n = a.size();
    std::vector<u32> w(n / 2);
    for (std::size_t len = n; len >= 2; len >>= 1U) {
        const std::size_t half = len / 2;
        const u32 root = mg.pow(mg.to(g), (mg.p - 1) / len);
        w[0] = mg.to(1);
        for (std::size_t k = 1; k < half; ++k) w[k] = mg.mul(w[k - 1], root);
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < half; ++k) {
                const u32 u = a[i + k];
                const u32 v = a[i + k + half];
                a[i + k] = mg.add(u, v);
                a[i + k + half] = mg.mul(mg.sub(u, v), w[k]);
            }
    }
}

void ntt_inverse(std::vector<u32>& a, const Montgomery& mg, u32 g) {
    const std::size_t n = a.size();
    std::vector<u32> w(n / 2);
    const u32 g_inv = mg.pow(mg.to(g), mg.p - 2);
    for (std::size_t len = 2; len <= n; len <<= 1U) {
        const std::size_t half = len / 2;
        const u32 root = mg.pow(g_inv, (mg.p - 1) / len);
        w[0] = mg.to(1);
        for (std::size_t k = 1; k < half; ++k) w[k] = mg.mul(w[k - 1], root);
        for (std::size_t i = 0; i < n; i += len)
            for (std::size_t k = 0; k < half; ++k) {
                const u32 u = a[i + k];
                const u32 v = mg.mul(a[i + k + half], w[k]);
                a[i + k] = mg.add(u, v);
                a[i + k + half] = mg.sub(u, v);
            }
    }
    const u32 inv_n = mg.pow(mg.to(static_cast<u32>(n % mg.p)), mg.p - 2);
    for (auto& x : a) x = mg.mul(x, inv_n);
}

// f^2 truncated to degree `keep`, all arithmetic mod p.
std::vector<u32> square_mod(const std::vector<u32>& f, std::size_t keep, const Montgomery& mg, u32 g) {
    std::size_t size = 1;
    while (size < 2 * f.size()) size <<= 1U;
    std::vector<u32> a(size, 0);
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = mg.to(f[i]);
    ntt_forward(a, mg, g);
    for (auto& x : a) x = mg.mul(x, x);
    ntt_inverse(a, mg, g);
    std::vector<u32> out(keep + 1);
    for (std::size_t i = 0; i <= keep; ++i) out[i] = mg.from(a[i]);
    return out;
}

// η^6 / q^{1/4} coefficients through degree n, exactly.
std::vector<std::int64_t> eta6(std::size_t n) {
    std::vector<std::pair<std::size_t, std::int64_t>> eta3;  // Σ (-1)^k (2k+1) q^{k(k+1)/2}
    for (std::size_t k = 0;; ++k) {
        const std::size_t e = k * (k + 1) / 2;
        if (e > n) break;
        eta3.emplace_back(e, (k % 2 ? -1 : 1) * static_cast<std::int64_t>(2 * k + 1));
    }
    std::vector<std::int64_t> out(n + 1, 0);
    for (auto [ei, ci] : eta3)
        for (auto [ej, cj] : eta3) {
            if (ei + ej > n) break;
            out[ei + ej] += ci * cj;
        }
    return out;
}

}  // namespace

std::vector<i128> ramanujan_tau(std::size_t N) {
    std::vector<i128> tau(N + 1, 0);
    if (N == 0) return tau;
    // Δ = q · (η^6)^4 / q; coefficient of q^n in Δ is coefficient n-1 of (η^6)^4.
    const std::size_t deg = N - 1;
    const auto e6 = eta6(deg);

    std::array<std::vector<u32>, 4> residues;
#pragma omp parallel for schedule(static)
    for (int k = 0; k < 4; ++k) {
        const u32 p = kPrimes[static_cast<std::size_t>(k)];
        const Montgomery mg(p);
        const u32 g = generator(p);
        std::vector<u32> f(deg + 1);
        for (std::size_t i = 0; i <= deg; ++i) {
            const std::int64_t r = e6[i] % static_cast<std::int64_t>(p);
            f[i] = static_cast<u32>(r < 0 ? r + p : r);
        }
        f = square_mod(f, deg, mg, g);
        residues[static_cast<std::size_t>(k)] = square_mod(f, deg, mg, g);
    }

    // Garner: x = t0 + p0 (t1 + p1 (t2 + p2 t3)).
    std::array<std::array<u64, 4>, 4> inv{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) inv[i][j] = nt::powmod(kPrimes[i] % kPrimes[j], kPrimes[j] - 2, kPrimes[j]);
    unsigned __int128 modulus = 1;
    for (u32 p : kPrimes) modulus *= p;
    const unsigned __int128 half = modulus / 2;

    for (std::size_t i = 0; i <= deg; ++i) {
        std::array<u64, 4> t{};
        for (std::size_t j = 0; j < 4; ++j) {
            u64 v = residues[j][i];
            for (std::size_t k = 0; k < j; ++k) {
                const u64 pj = kPrimes[j];
                v = (v + pj - t[k] % pj) % pj * inv[k][j] % pj;
            }
            t[j] = v;
        }
        unsigned __int128 x = t[3];
        for (int j = 2; j >= 0; --j) x = x * kPrimes[static_cast<std::size_t>(j)] + t[static_cast<std::size_t>(j)];
        tau[i + 1] = x > half ? -static_cast<i128>(modulus - x) : static_cast<i128>(x);
    }
    return tau;
}

std::vector<double> delta_normalized(std::size_t N) {
    const auto tau = ramanujan_tau(N);
    std::vector<double> out(N + 1, 0.0);
    for (std::size_t n = 1; n <= N; ++n)
        out[n] = static_cast<double>(tau[n]) * std::pow(static_cast<double>(n), -5.5);
    return out;
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    std::string s;
    while (u) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

namespace reference {

std::vector<i128> ramanujan_tau_naive(std::size_t N) {
    std::vector<i128> tau(N + 1, 0);
    if (N == 0) return tau;
    std::vector<i128> f(N, 0);  // Π (1 - q^n)^24 through degree N-1
    f[0] = 1;
    for (std::size_t n = 1; n < N; ++n)
        for (int rep = 0; rep < 24; ++rep)
            for (std::size_t i = N - 1; i >= n; --i) f[i] -= f[i - n];
    for (std::size_t i = 0; i < N; ++i) tau[i + 1] = f[i];
    return tau;
}

}  // namespace reference

}  // namespace selberg::modular
