#pragma once

// Seeded randomness with a fixed, implementation-independent mapping
// from engine output to field elements, so transcripts replay
// identically everywhere.

#include <cstdint>
#include <random>

#include "codist/fmatrix.hpp"

namespace codist::detail {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

inline std::uint32_t random_element(std::mt19937_64& rng, const Field& f) {
    return static_cast<std::uint32_t>(uniform_below(rng, f.order()));
}

inline std::uint32_t random_nonzero(std::mt19937_64& rng, const Field& f) {
    return 1 + static_cast<std::uint32_t>(uniform_below(rng, f.order() - 1));
}

inline FMatrix random_matrix(std::mt19937_64& rng, const FieldPtr& f, std::size_t rows,
                             std::size_t cols) {
    FMatrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set_raw(i, j, random_element(rng, *f));
    return m;
}

}  // namespace codist::detail
