#pragma once

// A one-parameter family of hermitian pairs (H, K) whose pencils xH + yK have
// only even-multiplicity eigenvalues, yet which generate the full matrix
// algebra; plus Laffey's 8 x 8 pair.

#include "burnside/criteria.hpp"
#include "burnside/graph.hpp"
#include "burnside/oracle.hpp"
#include "burnside/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

struct FamilyParams {
    std::size_t n = 4; // half-size; matrices are 2n x 2n
    Scalar b = Scalar(1);

    void validate() const
    {
        if (n < 4) throw std::invalid_argument("family needs n >= 4");
        if (!b.is_real()) throw std::invalid_argument("family parameter b must be real");
        if (b.is_zero()) throw std::invalid_argument("family parameter b must be nonzero");
    }
};

/// The 2 x 2 building blocks.
struct FamilyBlocks {
    Matrix alpha; // diag(1, -1)
    Matrix beta;  // [[0, b], [b, 0]]
    Matrix u;     // rotation by a quarter turn
};

inline FamilyBlocks family_blocks(const Scalar& b)
{
    return {Matrix{{1, 0}, {0, -1}}, Matrix{{0, b}, {b, 0}}, Matrix{{0, -1}, {1, 0}}};
}

struct FamilyPair {
    Matrix a; // skew-symmetric
    Matrix b; // block-diag(U, ..., U)
    Matrix h; // a^2
    Matrix k; // ab + ba
};

inline FamilyPair build_family(const FamilyParams& params)
{
    params.validate();
    const std::size_t n = params.n;
    const auto [alpha, beta, u] = family_blocks(params.b);
    const Matrix alpha_beta = alpha + beta;

    Matrix a(2 * n, 2 * n), bm(2 * n, 2 * n);
    auto put = [&](std::size_t i, std::size_t j, const Matrix& x) { a.set_block(2 * i, 2 * j, x); };
    for (std::size_t j = 0; j < n; ++j) {
        put(j, j, u * Scalar(static_cast<long>(j + 1)));
        bm.set_block(2 * j, 2 * j, u);
    }
    // Top row and first column; block 4 (index 3) carries alpha + beta.
    for (std::size_t j = 1; j < n; ++j) {
        const Matrix& x = j == 3 ? alpha_beta : alpha;
        put(0, j, x);
        put(j, 0, -x);
    }
    put(1, 2, alpha);
    put(1, 3, alpha);
    put(2, 1, -alpha);
    put(3, 1, -alpha);

    FamilyPair f{a, bm, a * a, a * bm + bm * a};
    return f;
}

/// Laffey's 8 x 8 integer pair.
inline std::pair<Matrix, Matrix> laffey_pair()
{
    Matrix h{
        {-122, 0, 12, 18, -30, 18, 26, 10},     {0, -122, -6, -12, -16, -28, 20, -16},
        {12, -6, -218, 0, 44, 8, 24, 12},       {18, -12, 0, -218, -2, -34, -10, 22},
        {-30, -16, 44, -2, -216, 0, -12, -8},   {18, -28, 8, -34, 0, -216, -8, 36},
        {26, 20, 24, -10, -12, -8, -120, 0},    {10, -16, 12, 22, -8, 36, 0, -120},
    };
    Matrix k = Matrix::diagonal({-4, -4, 4, 4, -8, -8, 8, 8});
    return {h, k};
}

struct PencilSample {
    Scalar x0;
    Scalar y0;
    UniPoly char_poly;
    SquareFreeFactorization squarefree;
    bool all_even = false;
    bool perfect_square = false; // all_even and a square leading coefficient
};

inline PencilSample sample_pencil(const Matrix& h, const Matrix& k, const Scalar& x0, const Scalar& y0)
{
    if (!h.is_square() || !k.is_square() || h.rows() != k.rows())
        throw std::invalid_argument("pencil coefficients must be square and of equal size");
    PencilSample s{x0, y0, char_poly(h * x0 + k * y0), {}, false, false};
    s.squarefree = square_free(s.char_poly);
    s.all_even = s.squarefree.all_even();
    s.perfect_square = s.all_even && exact_sqrt(s.squarefree.unit).has_value();
    return s;
}

using GridPoint = std::pair<Scalar, Scalar>;

/// Integer grid {lo..hi} x {lo..hi}, x varying slowest.
inline std::vector<GridPoint> integer_grid(long lo = -2, long hi = 2)
{
    std::vector<GridPoint> g;
    for (long x = lo; x <= hi; ++x)
        for (long y = lo; y <= hi; ++y) g.emplace_back(Scalar(x), Scalar(y));
    return g;
}

inline bool verify_even_multiplicity(const Matrix& h, const Matrix& k, std::span<const GridPoint> samples)
{
    if (samples.empty()) throw std::invalid_argument("no pencil samples");
    for (const auto& [x, y] : samples)
        if (!sample_pencil(h, k, x, y).perfect_square) return false;
    return true;
}

struct StructuralCheck {
    std::string name;
    bool holds;
};

struct CounterexampleReport {
    FamilyParams params;
    std::vector<StructuralCheck> structural;
    std::vector<PencilSample> samples;
    bool all_even = false;
    CriteriaVerdict criteria{Theorem::two_generators};
    std::size_t oracle_dimension = 0;

    bool structural_ok() const
    {
        for (const auto& c : structural)
            if (!c.holds) return false;
        return true;
    }
    bool pass() const
    {
        const std::size_t size = 2 * params.n;
        return structural_ok() && all_even && criteria.status == Status::pass
               && oracle_dimension == size * size;
    }
};

/// The pair of single-block words (top row, blocks 3 and 4) whose gram
/// matrices fail to commute for every nonzero b.
inline std::pair<CornerElement, CornerElement> family_witness_words()
{
    return {CornerElement{Word(2, {{0, 0, 2}}), CornerForm::gram},
            CornerElement{Word(2, {{0, 0, 3}}), CornerForm::gram}};
}

inline std::vector<StructuralCheck> family_structure_checks(const FamilyPair& f, std::size_t n)
{
    std::vector<Scalar> kdiag;
    for (std::size_t j = 1; j <= n; ++j)
        for (int t = 0; t < 2; ++t) kdiag.push_back(Scalar(-2 * static_cast<long>(j)));
    const Matrix id = Matrix::identity(2 * n);
    return {
        {"a_skew_symmetric", f.a.transpose() == -f.a},
        {"b_skew_symmetric", f.b.transpose() == -f.b},
        {"b_squared_is_minus_identity", f.b * f.b == -id},
        {"h_equals_a_squared", f.h == f.a * f.a},
        {"k_equals_anticommutator", f.k == f.a * f.b + f.b * f.a},
        {"h_symmetric", f.h.is_symmetric()},
        {"k_symmetric", f.k.is_symmetric()},
        {"k_block_diagonal_form", f.k == Matrix::diagonal(kdiag)},
    };
}

inline CounterexampleReport verify_counterexample(const FamilyParams& params, std::span<const GridPoint> grid,
                                                  std::size_t max_word_len = default_max_word_len)
{
    if (grid.empty()) throw std::invalid_argument("empty sample grid");
    const FamilyPair f = build_family(params);
    CounterexampleReport r;
    r.params = params;
    r.structural = family_structure_checks(f, params.n);

    r.all_even = true;
    for (const auto& [x, y] : grid) {
        r.samples.push_back(sample_pencil(f.h, f.k, x, y));
        r.all_even = r.all_even && r.samples.back().perfect_square;
    }
    r.criteria = check_thm_2gens(f.h, f.k, max_word_len, family_witness_words());
    const std::vector<Matrix> gens{f.h, f.k};
    r.oracle_dimension = algebra_dimension(gens);
    return r;
}

} // namespace burnside
