#pragma once

// Matrices shared by several suites.

#include "burnside/matrix.hpp"

#include <vector>

namespace burnside::fixtures {

// Six nodes, two strongly connected components {1,2,4,5} and {3,6}.
inline std::vector<Matrix> two_components()
{
    return {
        Matrix{{1, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 0}, {0, 0, 1, 1, 1, 1},
               {1, 1, 0, 1, 1, 0}, {1, 0, 0, 1, 0, 0}, {1, 0, 1, 0, 1, 0}},
        Matrix::diagonal({1, 1, 1, 2, 2, 2}),
    };
}

// Two weakly connected pieces {1,5,6} and {2,3,4}.
inline std::vector<Matrix> disconnected()
{
    return {
        Matrix{{1, 0, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
               {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 1}},
        Matrix{{0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 1, 0, 0},
               {0, 1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}},
    };
}

// Connected but not strongly connected.
inline std::vector<Matrix> invariant_subspace()
{
    return {
        Matrix{{0, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, 0}},
        Matrix{{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    };
}

inline Matrix c1() { return Matrix{{0, 1, 0, 1}, {1, 0, 2, 0}, {0, 2, 0, 0}, {1, 0, 0, 0}}; }
inline Matrix c2() { return Matrix::diagonal({1, 1, 0, 0}); }

// 12 x 12 symmetric matrix whose first four rows are fixed; the rest is the
// mirror image, padded with zeros. Valid under partitions (1,1,2,2) and (1,...,1).
inline Matrix twelve_by_twelve()
{
    const std::vector<std::vector<long>> top{
        {0, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0},
        {1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 1},
        {1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1},
        {1, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1},
    };
    Matrix h(12, 12);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 12; ++j) {
            h(i, j) = Scalar(top[i][j]);
            h(j, i) = Scalar(top[i][j]);
        }
    return h;
}

} // namespace burnside::fixtures
