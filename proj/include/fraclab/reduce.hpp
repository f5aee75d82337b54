#pragma once

#include <cstddef>
#include <vector>

namespace fraclab {

/**
 * Deterministic parallel sum: the index range is cut into fixed-size blocks,
 * each block is accumulated serially, and the block partials are combined in
 * block order. The result is independent of the number of OpenMP threads.
 */
template <typename F>
double deterministic_sum(std::size_t count, F&& term) {
    constexpr std::size_t kBlock = 4096;
    const std::size_t nblocks = (count + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static)
    for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kBlock;
        const std::size_t end = begin + kBlock < count ? begin + kBlock : count;
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += term(i);
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

} // namespace fraclab
