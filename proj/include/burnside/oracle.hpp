#pragma once

// Ground-truth dimension of the algebra generated by a matrix set, by span
// closure of products over an exact reduced row echelon basis.

#include "burnside/graph.hpp"
#include "burnside/matrix.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

namespace burnside {

/// Reduced row echelon basis of flattened n x n matrices.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return rows_.size(); }
    bool full() const { return dimension() == ambient_ * ambient_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduces m against the basis; true (and the basis grows) iff m was
    /// outside the current span.
    bool insert(const Matrix& m)
    {
        auto v = reduce(m);
        auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (lead == v.end()) return false;
        const std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
        const Scalar scale = *lead;
        for (std::size_t k = pivot; k < v.size(); ++k)
            if (!v[k].is_zero()) v[k] /= scale;
        // Keep the basis reduced: clear the new pivot column from older rows.
        for (auto& row : rows_) {
            if (row[pivot].is_zero()) continue;
            const Scalar f = row[pivot];
            for (std::size_t k = pivot; k < row.size(); ++k)
                if (!v[k].is_zero()) row[k] -= f * v[k];
        }
        auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
        auto offset = at - pivots_.begin();
        pivots_.insert(at, pivot);
        rows_.insert(rows_.begin() + offset, std::move(v));
        return true;
    }

    bool contains(const Matrix& m) const
    {
        auto v = reduce(m);
        return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
    }

private:
    std::vector<Scalar> reduce(const Matrix& m) const
    {
        if (m.rows() != ambient_ || m.cols() != ambient_) throw std::invalid_argument("matrix size mismatch");
        std::vector<Scalar> v = flatten(m);
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t p = pivots_[r];
            if (v[p].is_zero()) continue;
            const Scalar f = v[p];
            const auto& row = rows_[r];
            for (std::size_t k = p; k < v.size(); ++k)
                if (!row[k].is_zero()) v[k] -= f * row[k];
        }
        return v;
    }

    std::size_t ambient_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

enum class ClosureMode {
    left,      // extend words on the left only
    two_sided, // also extend on the right (cross-check)
};

struct ClosureOptions {
    bool include_identity = true;
    ClosureMode mode = ClosureMode::left;
};

struct ClosureResult {
    SpanBasis basis;
    /// Dimension after seeding, then after each pass over the frontier.
    std::vector<std::size_t> dimension_per_pass;

    std::size_t dimension() const { return basis.dimension(); }
};

inline ClosureResult algebra_closure(std::span<const Matrix> generators, ClosureOptions options = {})
{
    require_same_square_size(generators);
    const std::size_t n = generators.front().rows();
    ClosureResult result{SpanBasis(n), {}};
    SpanBasis& basis = result.basis;

    // Frontier holds actual products (not reduced rows) that enlarged the span.
    std::vector<Matrix> frontier;
    if (options.include_identity && basis.insert(Matrix::identity(n))) frontier.push_back(Matrix::identity(n));
    for (const auto& g : generators)
        if (basis.insert(g)) frontier.push_back(g);
    result.dimension_per_pass.push_back(basis.dimension());

    while (!frontier.empty() && !basis.full()) {
        std::vector<Matrix> next;
        for (const auto& x : frontier) {
            for (const auto& g : generators) {
                Matrix left = g * x;
                if (basis.insert(left)) next.push_back(std::move(left));
                if (options.mode == ClosureMode::two_sided) {
                    Matrix right = x * g;
                    if (basis.insert(right)) next.push_back(std::move(right));
                }
            }
        }
        frontier = std::move(next);
        result.dimension_per_pass.push_back(basis.dimension());
    }
    return result;
}

inline std::size_t algebra_dimension(std::span<const Matrix> generators, bool include_identity = true)
{
    return algebra_closure(generators, {include_identity, ClosureMode::left}).dimension();
}

inline bool is_full_algebra(std::span<const Matrix> generators)
{
    const std::size_t n = generators.empty() ? 0 : generators.front().rows();
    return algebra_dimension(generators, true) == n * n;
}

} // namespace burnside
