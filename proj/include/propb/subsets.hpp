#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

namespace propb {

// Calls f on every k-subset of `pool`, in lexicographic order of positions.
// Stops early and returns false when f returns false.
template <typename T, typename F>
bool for_each_subset(std::span<const T> pool, std::size_t k, F&& f)
{
    if (k > pool.size())
        return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<T> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            subset[i] = pool[idx[i]];
        if (!f(std::as_const(subset)))
            return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == pool.size() - k + i - 1)
            --i;
        if (i == 0)
            return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace propb
