#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "selberg/accuracy.hpp"

namespace selberg {

/// Σ_{k=lo}^{hi} f(k) over a fixed number of contiguous blocks, each summed
/// in order and then combined in order: the result is independent of the
/// thread count and of scheduling.
template <class F>
cplx ordered_parallel_sum(std::int64_t lo, std::int64_t hi, F&& f, std::int64_t blocks = 256) {
    if (hi < lo) return 0.0;
    const std::int64_t n = hi - lo + 1;
    blocks = std::max<std::int64_t>(1, std::min(blocks, n));
    std::vector<cplx> part(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::int64_t s = lo + n * b / blocks, e = lo + n * (b + 1) / blocks;
        cplx acc = 0.0;
        for (std::int64_t k = s; k < e; ++k) acc += f(k);
        part[static_cast<std::size_t>(b)] = acc;
    }
    cplx total = 0.0;
    for (const cplx& v : part) total += v;
    return total;
}

}  // namespace selberg
