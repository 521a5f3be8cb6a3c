#pragma once

// Random instance generators for property checks. Deterministic for a given
// engine state.

#include "burnside/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace burnside::random {

using Engine = std::mt19937_64;

inline Scalar small_int(Engine& rng, long lo, long hi)
{
    return Scalar(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline std::vector<std::size_t> permutation(Engine& rng, std::size_t n)
{
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Entries in [lo, hi], each kept with probability `density`.
inline Matrix matrix(Engine& rng, std::size_t n, double density, long lo = -3, long hi = 3)
{
    std::bernoulli_distribution keep(density);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (keep(rng)) m(i, j) = small_int(rng, lo, hi);
    return m;
}

/// Real symmetric, or complex hermitian when `complex` is set.
inline Matrix hermitian(Engine& rng, std::size_t n, double density, bool complex = false, long lo = -3, long hi = 3)
{
    std::bernoulli_distribution keep(density);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = small_int(rng, lo, hi);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!keep(rng)) continue;
            Scalar v = small_int(rng, lo, hi);
            if (complex) v += Scalar(0, 1) * small_int(rng, lo, hi);
            m(i, j) = v;
            m(j, i) = v.conj();
        }
    }
    return m;
}

/// `count` matrices sharing a block upper triangular shape (zero lower-left
/// block below a random split), then hidden by a common random relabeling.
inline std::vector<Matrix> block_triangular_set(Engine& rng, std::size_t n, std::size_t count, double density = 0.7)
{
    const std::size_t split = std::uniform_int_distribution<std::size_t>(1, n - 1)(rng);
    const auto perm = permutation(rng, n);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < count; ++k) {
        Matrix m = matrix(rng, n, density);
        for (std::size_t i = split; i < n; ++i)
            for (std::size_t j = 0; j < split; ++j) m(i, j) = Scalar();
        out.push_back(permute(m, perm));
    }
    return out;
}

/// Diagonal 2n x 2n with each 2-block either a repeated value or two values,
/// all values distinct across blocks.
inline Matrix paired_diagonal(Engine& rng, std::size_t n)
{
    std::vector<long> pool(8 * n + 8);
    std::iota(pool.begin(), pool.end(), -static_cast<long>(4 * n + 4));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::bernoulli_distribution repeated(0.7);
    std::vector<Scalar> d;
    std::size_t next = 0;
    for (std::size_t b = 0; b < n; ++b) {
        const long v = pool[next++];
        d.push_back(Scalar(v));
        d.push_back(Scalar(repeated(rng) ? v : pool[next++]));
    }
    return Matrix::diagonal(d);
}

/// Diagonal with n distinct integer entries.
inline Matrix distinct_diagonal(Engine& rng, std::size_t n)
{
    std::vector<long> pool(4 * n + 4);
    std::iota(pool.begin(), pool.end(), -static_cast<long>(2 * n + 2));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < n; ++i) d.push_back(Scalar(pool[i]));
    return Matrix::diagonal(d);
}

} // namespace burnside::random
