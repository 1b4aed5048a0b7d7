#include "selberg/numtheory.hpp"

#include <algorithm>
#include <cmath>

#include "selberg/errors.hpp"

namespace selberg::nt {

u64 gcd(u64 a, u64 b) {
    while (b != 0) {
        const u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 lcm(u64 a, u64 b) { return a / gcd(a, b) * b; }

u64 powmod(u64 base, u64 exp, u64 mod) {
    if (mod == 1) return 0;
    unsigned __int128 result = 1;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1U) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1U;
    }
    return static_cast<u64>(result);
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw DomainError("factorize: n must be positive");
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.emplace_back(p, k);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (auto [p, k] : factorize(n)) {
        const std::size_t size = out.size();
        u64 pk = 1;
        for (int e = 1; e <= k; ++e) {
            pk *= p;
            for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n) {
    u64 phi = n;
    for (auto [p, k] : factorize(n)) phi = phi / p * (p - 1);
    return phi;
}

u64 carmichael_lambda(u64 n) {
    u64 lam = 1;
    for (auto [p, k] : factorize(n)) {
        u64 pk1 = 1;
        for (int e = 1; e < k; ++e) pk1 *= p;
        u64 part = pk1 * (p - 1);
        if (p == 2 && k >= 3) part /= 2;
        lam = lcm(lam, part);
    }
    return lam;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (spf[i] == 0) {
            spf[i] = i;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (p > spf[i] || m > n) break;
            spf[m] = p;
        }
    }
    return spf;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    if (limit < 2) return {};
    const auto root = static_cast<std::uint32_t>(std::sqrt(static_cast<double>(limit))) + 1;
    const std::vector<std::uint32_t> base = reference::primes_up_to_serial(root);

    constexpr std::uint32_t kSegment = 1U << 16;
    const std::uint32_t segments = limit / kSegment + 1;
    std::vector<std::vector<std::uint32_t>> found(segments);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(segments); ++s) {
        const std::uint64_t lo = static_cast<std::uint64_t>(s) * kSegment;
        const std::uint64_t hi = std::min<std::uint64_t>(lo + kSegment, static_cast<std::uint64_t>(limit) + 1);
        std::vector<char> composite(hi - lo, 0);
        for (std::uint32_t p : base) {
            const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
            if (p2 >= hi) break;
            std::uint64_t start = std::max<std::uint64_t>(p2, (lo + p - 1) / p * p);
            for (std::uint64_t m = start; m < hi; m += p) composite[m - lo] = 1;
        }
        auto& out = found[static_cast<std::size_t>(s)];
        for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n < hi; ++n)
            if (!composite[n - lo]) out.push_back(static_cast<std::uint32_t>(n));
    }

    std::vector<std::uint32_t> primes;
    for (auto& seg : found) primes.insert(primes.end(), seg.begin(), seg.end());
    return primes;
}

std::vector<std::uint32_t> divisor_counts(std::uint32_t n) {
    std::vector<std::uint32_t> d(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t i = 1; i <= n; ++i)
        for (std::uint64_t m = i; m <= n; m += i) ++d[m];
    return d;
}

double divisor_bound_constant(double eps) {
    if (!(eps > 0.0)) throw DomainError("divisor_bound_constant: eps must be positive");
    double c = 1.0;
    // Primes with p^eps >= 2 contribute max_k (k+1)/p^{k eps} = 1.
    const auto cutoff = static_cast<u64>(std::ceil(std::pow(2.0, 1.0 / eps)));
    for (u64 p = 2; p <= cutoff; ++p) {
        if (!is_prime(p)) continue;
        double best = 1.0;
        for (int k = 1; k < 4096; ++k) {
            const double v = (k + 1.0) / std::pow(static_cast<double>(p), k * eps);
            best = std::max(best, v);
            if (v < 1.0 && k > 1.0 / (eps * std::log(static_cast<double>(p)))) break;
        }
        c *= best;
    }
    return c;
}

namespace reference {

std::vector<std::uint32_t> primes_up_to_serial(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t m = i * i; m <= limit; m += i) composite[m] = 1;
    }
    return primes;
}

std::vector<std::uint32_t> primes_up_to_linear(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<std::uint32_t> lp(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (lp[i] == 0) {
            lp[i] = i;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
            if (p > lp[i] || m > limit) break;
            lp[m] = p;
        }
    }
    return primes;
}

}  // namespace reference

}  // namespace selberg::nt
