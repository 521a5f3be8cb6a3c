#pragma once

// Reference algebra dimension: rank of the stacked flattened products of all
// words up to a length bound. Exponential, for small cross-checks only.

#include "burnside/matrix.hpp"

#include <span>
#include <vector>

namespace burnside::brute {

inline std::size_t stacked_products_rank(std::span<const Matrix> gens, std::size_t max_len, bool include_identity)
{
    const std::size_t n = gens.front().rows();
    std::vector<Matrix> rows;
    if (include_identity) rows.push_back(Matrix::identity(n));
    std::vector<Matrix> level(gens.begin(), gens.end());
    for (std::size_t len = 1; len <= max_len; ++len) {
        rows.insert(rows.end(), level.begin(), level.end());
        if (len == max_len) break;
        std::vector<Matrix> next;
        next.reserve(level.size() * gens.size());
        for (const auto& w : level)
            for (const auto& g : gens) next.push_back(w * g);
        level = std::move(next);
    }
    Matrix stacked(rows.size(), n * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) stacked(r, c) = rows[r](c / n, c % n);
    return rank(stacked);
}

} // namespace burnside::brute
