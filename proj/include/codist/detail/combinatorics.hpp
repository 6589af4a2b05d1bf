#pragma once

#include <cstdint>
#include <vector>

namespace codist::detail {

// Visits all k-subsets of {0,...,n-1} in lexicographic order until fn
// returns true; returns true if some call did.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (fn(static_cast<const std::vector<std::size_t>&>(idx))) return true;
        // advance
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + n - k) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return false;
        }
        if (k == 0) return false;
    }
}

inline std::uint64_t count_combinations(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
    return c;
}

}  // namespace codist::detail
