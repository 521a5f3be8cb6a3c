#include "burnside/criteria.hpp"
#include "burnside/kippenhahn.hpp"
#include "burnside/oracle.hpp"
#include "burnside/random.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace burnside;

namespace {

std::vector<std::size_t> parts(const LPartition& p) { return p.parts; }

Word concat(const Word& a, const Word& b)
{
    auto steps = a.steps();
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return Word(a.p(), steps);
}

Word reversed(const Word& w)
{
    std::vector<WordStep> steps;
    for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) steps.push_back({it->matrix, it->col, it->row});
    return Word(w.p(), steps);
}

// Brute force: every composition of n, filtered by the partition rules.
std::vector<std::vector<std::size_t>> brute_l_partitions(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (left == 0) {
            if (is_l_partition(cur)) out.push_back(cur);
            return;
        }
        for (std::size_t k = 1; k <= left; ++k) {
            cur.push_back(k);
            rec(left - k);
            cur.pop_back();
        }
    };
    rec(n);
    std::sort(out.begin(), out.end());
    return out;
}

BurnsideGraph graph_from(std::size_t n, std::initializer_list<Edge> edges)
{
    BurnsideGraph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

std::vector<Scalar> scalars(std::initializer_list<long> xs)
{
    std::vector<Scalar> out;
    for (long x : xs) out.push_back(Scalar(x));
    return out;
}

} // namespace

TEST(Word, ChainingIsEnforced)
{
    Word w(2, {{0, 0, 1}, {0, 1, 3}, {1, 3, 2}, {2, 2, 2}});
    EXPECT_EQ(w.base(), 0u);
    EXPECT_EQ(w.end(), 2u);
    EXPECT_EQ(w.length(), 4u);
    EXPECT_FALSE(w.closed());
    EXPECT_THROW(Word(2, {{0, 0, 1}, {0, 2, 3}}), std::invalid_argument);
    EXPECT_THROW(Word(2, {}), std::invalid_argument);
    EXPECT_EQ(w.extended(0, 0).end(), 0u);
}

TEST(Word, EvaluatesFamilyBlocks)
{
    for (long b : {1L, 2L, -3L}) {
        const auto f = build_family({4, Scalar(b)});
        const std::vector<Matrix> hs{f.h};
        EXPECT_EQ(eval_word(Word(2, {{0, 0, 2}}), hs), (Matrix{{1, -2}, {-2, 1}}));
        EXPECT_EQ(eval_word(Word(2, {{0, 0, 2}, {0, 2, 0}}), hs), (Matrix{{5, -4}, {-4, 5}}));
    }
    const std::vector<Matrix> id{Matrix::identity(4)};
    EXPECT_EQ(eval_word(Word(2, {{0, 1, 1}}), id), Matrix::identity(2));
    EXPECT_THROW(eval_word(Word(2, {{1, 0, 0}}), id), std::out_of_range);
}

TEST(Word, ConcatenationMultiplies)
{
    random::Engine rng(83);
    for (int t = 0; t < 30; ++t) {
        const std::vector<Matrix> hs{random::matrix(rng, 6, 0.5), random::matrix(rng, 6, 0.5)};
        auto from0 = enumerate_words(hs, 2, 0, 2);
        if (from0.empty()) continue;
        const Word& a = from0[static_cast<std::size_t>(t) % from0.size()];
        auto from_end = enumerate_words(hs, 2, a.end(), 2);
        if (from_end.empty()) continue;
        const Word& b = from_end.back();
        EXPECT_EQ(eval_word(concat(a, b), hs), eval_word(a, hs) * eval_word(b, hs));
    }
}

TEST(Word, ReversalOfHermitianWordIsConjugateTranspose)
{
    random::Engine rng(89);
    for (int t = 0; t < 20; ++t) {
        const std::vector<Matrix> hs{random::hermitian(rng, 6, 0.6, true), random::hermitian(rng, 6, 0.6, true)};
        for (const auto& w : enumerate_words(hs, 2, 0, 3)) {
            const Word r = reversed(w);
            EXPECT_TRUE(word_is_valid(r, hs));
            EXPECT_EQ(eval_word(r, hs), eval_word(w, hs).conj_transpose());
        }
    }
}

TEST(EnumerateWords, FamilyExamples)
{
    const auto f = build_family({4, Scalar(1)});
    const std::vector<Matrix> hs{f.h};
    auto single = enumerate_words(hs, 2, 0, 1, 2);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0], Word(2, {{0, 0, 2}}));
    EXPECT_TRUE(enumerate_words(hs, 2, 0, 0).empty());

    auto loops = enumerate_words(hs, 2, 0, 2, 0);
    for (std::size_t j = 1; j < 4; ++j)
        EXPECT_NE(std::find(loops.begin(), loops.end(), Word(2, {{0, 0, j}, {0, j, 0}})), loops.end());
    for (const auto& w : loops) EXPECT_TRUE(w.closed());
    EXPECT_THROW(enumerate_words(hs, 2, 4, 1), std::out_of_range);
    EXPECT_THROW(enumerate_words(hs, 3, 0, 1), std::invalid_argument);
}

TEST(EnumerateWords, OrderedAndComplete)
{
    const std::vector<Matrix> hs{Matrix{{1, 1}, {1, 0}}, Matrix::diagonal({2, 3})};
    auto words = enumerate_words(hs, 1, 0, 3);
    for (std::size_t k = 1; k < words.size(); ++k) {
        ASSERT_LE(words[k - 1].length(), words[k].length());
        if (words[k - 1].length() == words[k].length()) {
            EXPECT_LT(words[k - 1].steps(), words[k].steps());
        }
    }
    // Nonzero 1-blocks: matrix 0 has (0,0),(0,1),(1,0); matrix 1 has (0,0),(1,1).
    // Count walks from node 0 with the transfer matrix [[2,1],[1,1]].
    std::size_t expected = 0;
    std::vector<std::size_t> at{1, 0}; // number of walks ending at each node
    for (int len = 0; len < 3; ++len) {
        std::vector<std::size_t> next{2 * at[0] + at[1], at[0] + at[1]};
        at = next;
        expected += at[0] + at[1];
    }
    EXPECT_EQ(words.size(), expected);
}

TEST(MultP, Examples)
{
    EXPECT_TRUE(check_mult_p(Matrix::diagonal({1, -1, 2, 3, 4, 4}), 2));
    EXPECT_FALSE(check_mult_p(Matrix::diagonal({5, 5, 5, 1}), 2));
    EXPECT_TRUE(check_mult_p(build_family({4, Scalar(1)}).k, 2));
    EXPECT_TRUE(check_mult_p(Matrix::diagonal({5, 5, 5, 1}), 3));
    EXPECT_THROW(check_mult_p(Matrix{{1, 1}, {1, 1}}, 2), std::invalid_argument);
}

TEST(MultP, BlockAlignment)
{
    EXPECT_TRUE(eigenvalues_block_aligned(Matrix::diagonal({1, 1, 0, 0}), 2));
    EXPECT_TRUE(eigenvalues_block_aligned(Matrix::diagonal({1, 2, 3, 3}), 2));
    EXPECT_FALSE(eigenvalues_block_aligned(Matrix::diagonal({1, 2, 2, 3}), 2));
    EXPECT_THROW(eigenvalues_block_aligned(Matrix::diagonal({1, 2, 3}), 2), std::invalid_argument);
}

TEST(Projectors, Examples)
{
    auto two = eigen_projector_polys(Matrix::diagonal({1, 1, 2, 2}), 2);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], (UniPoly{Scalar(2), Scalar(-1)}));
    EXPECT_EQ(two[0](Matrix::diagonal({1, 1, 2, 2})), Matrix::diagonal({1, 1, 0, 0}));

    auto one = eigen_projector_polys(Matrix::diagonal({7, 7}), 2);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], UniPoly::constant(Scalar(1)));

    const Matrix k = build_family({4, Scalar(1)}).k;
    auto four = eigen_projector_polys(k, 2);
    ASSERT_EQ(four.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(four[i].degree(), 3);
        Matrix expected(8, 8);
        expected.set_block(2 * i, 2 * i, Matrix::identity(2));
        EXPECT_EQ(four[i](k), expected);
    }
    EXPECT_THROW(eigen_projector_polys(Matrix::diagonal({1, 2, 2, 3}), 2), std::invalid_argument);
}

TEST(Projectors, OrthogonalAndSumToIdentity)
{
    random::Engine rng(97);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 1 + t % 5;
        const Matrix k = random::paired_diagonal(rng, n);
        auto polys = eigen_projector_polys(k, 2);
        Matrix sum(2 * n, 2 * n);
        std::vector<Matrix> values;
        for (const auto& q : polys) values.push_back(q(k));
        for (std::size_t i = 0; i < n; ++i) {
            sum += values[i];
            EXPECT_EQ(values[i] * values[i], values[i]);
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                EXPECT_TRUE((values[i] * values[j]).is_zero());
            }
        }
        EXPECT_EQ(sum, Matrix::identity(2 * n));
    }
}

TEST(LPartitions, SmallCases)
{
    auto two = enumerate_l_partitions(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(parts(two[0]), (std::vector<std::size_t>{1, 1}));

    auto four = enumerate_l_partitions(4);
    ASSERT_EQ(four.size(), 2u);
    EXPECT_EQ(parts(four[0]), (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_EQ(parts(four[1]), (std::vector<std::size_t>{1, 1, 2}));

    auto six = enumerate_l_partitions(6);
    std::vector<std::vector<std::size_t>> got;
    for (const auto& p : six) got.push_back(p.parts);
    EXPECT_EQ(got, (std::vector<std::vector<std::size_t>>{
                       {1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 2}, {1, 1, 1, 3}, {1, 1, 2, 2}}));
    EXPECT_THROW(enumerate_l_partitions(1), std::invalid_argument);
}

TEST(LPartitions, MatchBruteForceUpToTen)
{
    const std::vector<std::size_t> counts{1, 1, 2, 2, 4, 4, 8, 8, 14};
    for (std::size_t n = 2; n <= 10; ++n) {
        std::vector<std::vector<std::size_t>> got;
        for (const auto& p : enumerate_l_partitions(n)) {
            EXPECT_TRUE(is_l_partition(p.parts));
            EXPECT_EQ(p.total(), n);
            got.push_back(p.parts);
        }
        EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
        EXPECT_EQ(got, brute_l_partitions(n)) << "n = " << n;
        EXPECT_EQ(got.size(), counts[n - 2]);
    }
}

TEST(LPartitions, Validity)
{
    const std::vector<std::size_t> doubling{1, 1, 2, 4, 8};
    EXPECT_TRUE(is_l_partition(doubling));
    const std::vector<std::size_t> bad_start{1, 2, 1};
    EXPECT_FALSE(is_l_partition(bad_start));
    const std::vector<std::size_t> not_prefix{1, 1, 3};
    EXPECT_FALSE(is_l_partition(not_prefix));
    const std::vector<std::size_t> decreasing{1, 1, 2, 1};
    EXPECT_FALSE(is_l_partition(decreasing));
}

TEST(ConditionLp, Examples)
{
    auto [h, k] = laffey_pair();
    auto first = check_l_p(h, 2);
    ASSERT_TRUE(first);
    EXPECT_EQ(parts(*first), (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_TRUE(satisfies_l_p(h, 2, LPartition{{1, 1, 2}}));

    const auto f = build_family({4, Scalar(1)});
    auto fam = check_l_p(f.h, 2);
    ASSERT_TRUE(fam);
    EXPECT_EQ(parts(*fam), (std::vector<std::size_t>{1, 1, 1, 1}));

    const Matrix big = fixtures::twelve_by_twelve();
    EXPECT_TRUE(satisfies_l_p(big, 2, LPartition{{1, 1, 2, 2}}));
    EXPECT_TRUE(satisfies_l_p(big, 2, LPartition{{1, 1, 1, 1, 1, 1}}));
    EXPECT_FALSE(satisfies_l_p(big, 2, LPartition{{1, 1, 2}}));

    // Singular top-left block rules out every partition.
    EXPECT_FALSE(check_l_p(Matrix::diagonal({0, 1, 1, 1}), 2));
    EXPECT_THROW(check_l_p(Matrix::identity(5), 2), std::invalid_argument);
}

TEST(NoncommutingPair, FamilyCommutator)
{
    const auto f = build_family({4, Scalar(1)});
    const std::vector<Matrix> hs{f.h};
    auto found = find_noncommuting_pair(hs, 2, 1);
    ASSERT_TRUE(found);
    EXPECT_FALSE(found->commutator.is_zero());
    EXPECT_EQ(found->commutator, commutator(corner_value(found->first, hs), corner_value(found->second, hs)));

    auto [w13, w14] = family_witness_words();
    EXPECT_EQ(commutator(corner_value(w13, hs), corner_value(w14, hs)), (Matrix{{0, 48}, {-48, 0}}));
}

TEST(NoncommutingPair, DiagonalBlocksCommute)
{
    Matrix h(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) h.set_block(2 * i, 2 * j, Matrix::diagonal({long(i + j + 1), 2}));
    const std::vector<Matrix> hs{h};
    EXPECT_FALSE(find_noncommuting_pair(hs, 2, 3));
}

TEST(NoncommutingPair, CornerExample)
{
    const std::vector<Matrix> hs{fixtures::c1()};
    auto found = find_noncommuting_pair(hs, 2, 1);
    ASSERT_TRUE(found);
    EXPECT_EQ(corner_value(found->first, hs), (Matrix{{0, 2}, {2, 0}}));
    EXPECT_EQ(found->first.form, CornerForm::symmetrized);
    EXPECT_EQ(corner_value(found->second, hs), Matrix::diagonal({1, 4}));
    EXPECT_EQ(found->second.word, Word(2, {{0, 0, 1}}));
    // Every gram matrix of a single-block word over C1 is diagonal.
    for (const auto& w : enumerate_words(hs, 2, 0, 3))
        EXPECT_TRUE(corner_value({w, CornerForm::gram}, hs).is_diagonal());
}

TEST(TwoGenerators, CornerExamplePasses)
{
    auto v = check_thm_2gens(fixtures::c1(), fixtures::c2());
    EXPECT_EQ(v.status, Status::pass);
    ASSERT_TRUE(v.witnesses.partition);
    EXPECT_EQ(parts(*v.witnesses.partition), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(v.witnesses.corner_pair.size(), 2u);
    const std::vector<Matrix> gens{fixtures::c1(), fixtures::c2()};
    EXPECT_TRUE(is_full_algebra(gens));
}

TEST(TwoGenerators, FamilyPasses)
{
    const auto f = build_family({4, Scalar(1)});
    auto v = check_thm_2gens(f.h, f.k);
    EXPECT_EQ(v.status, Status::pass);
    EXPECT_EQ(parts(*v.witnesses.partition), (std::vector<std::size_t>{1, 1, 1, 1}));

    auto supplied = check_thm_2gens(f.h, f.k, 3, family_witness_words());
    ASSERT_EQ(supplied.status, Status::pass);
    EXPECT_EQ(supplied.witnesses.corner_pair[0].word, Word(2, {{0, 0, 2}}));
    EXPECT_EQ(supplied.witnesses.corner_pair[1].word, Word(2, {{0, 0, 3}}));
    EXPECT_EQ(*supplied.witnesses.commutator, (Matrix{{0, 48}, {-48, 0}}));
}

TEST(TwoGenerators, InvalidSuppliedPairFallsBackToSearch)
{
    const auto f = build_family({4, Scalar(1)});
    const CornerElement same{Word(2, {{0, 0, 2}}), CornerForm::gram};
    auto v = check_thm_2gens(f.h, f.k, 3, std::pair{same, same});
    ASSERT_EQ(v.status, Status::pass);
    EXPECT_NE(v.witnesses.corner_pair[0].word, v.witnesses.corner_pair[1].word);
}

TEST(TwoGenerators, Outcomes)
{
    const Matrix id = Matrix::identity(4);
    auto obstructed = check_thm_2gens(id, id);
    EXPECT_EQ(obstructed.status, Status::fail_obstructed);
    EXPECT_TRUE(obstructed.witnesses.permutation);

    // Triple eigenvalue: the multiplicity condition fails, which is not a disproof.
    auto mult = check_thm_2gens(fixtures::c1(), Matrix::diagonal({1, 1, 1, 2}));
    EXPECT_EQ(mult.status, Status::inconclusive);
    EXPECT_FALSE(mult.conditions.back().holds);

    // Strongly connected but the top-left block is singular.
    const Matrix h{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
    auto lp = check_thm_2gens(h, Matrix::diagonal({1, 1, 2, 2}));
    EXPECT_EQ(lp.status, Status::inconclusive);
    EXPECT_EQ(lp.conditions.back().name, "l_p");

    // Every block is a polynomial in the swap J, so all corner elements commute;
    // the pair is also genuinely not full (it commutes with I (x) J).
    const Matrix j{{0, 1}, {1, 0}};
    Matrix hj(4, 4);
    hj.set_block(0, 0, j);
    hj.set_block(0, 2, Matrix::identity(2));
    hj.set_block(2, 0, Matrix::identity(2));
    hj.set_block(2, 2, Matrix::identity(2));
    auto none = check_thm_2gens(hj, Matrix::diagonal({1, 1, 2, 2}));
    EXPECT_EQ(none.status, Status::inconclusive);
    EXPECT_EQ(none.conditions.back().name, "noncommuting_words");
    const std::vector<Matrix> gens{hj, Matrix::diagonal({1, 1, 2, 2})};
    EXPECT_LT(algebra_dimension(gens), 16u);
}

TEST(TwoGenerators, Errors)
{
    EXPECT_THROW(check_thm_2gens(Matrix::identity(3), Matrix::identity(3)), std::invalid_argument);
    EXPECT_THROW(check_thm_2gens(fixtures::c1(), fixtures::c1()), std::invalid_argument);
    EXPECT_THROW(check_thm_2gens(Matrix{{0, 1}, {0, 0}}, Matrix::identity(2)), std::invalid_argument);
    EXPECT_THROW(check_thm_2gens(Matrix::identity(4), Matrix::identity(2)), std::invalid_argument);
}

TEST(QGenerators, CornerExamplePassesWithQTwo)
{
    auto v = check_thm_qgens(fixtures::c1(), fixtures::c2(), 2);
    EXPECT_EQ(v.status, Status::pass);
    EXPECT_FALSE(v.witnesses.loop_words.empty());
    ASSERT_TRUE(v.witnesses.separating_word);
    EXPECT_EQ(*v.witnesses.separating_word, Word(2, {{0, 0, 1}}));
}

TEST(QGenerators, GenericWitnessPasses)
{
    {
        auto [h, k] = generic_witness(2, 3, graph_from(2, {{0, 1}, {1, 0}}), scalars({1, 2}), scalars({0, 1, 2}));
        EXPECT_EQ(h.rows(), 6u);
        auto v = check_thm_qgens(h, k, 2);
        EXPECT_EQ(v.status, Status::pass);
        const std::vector<Matrix> gens{h, k};
        EXPECT_EQ(algebra_dimension(gens), 36u);
    }
    {
        auto triangle = graph_from(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
        auto [h, k] = generic_witness(3, 3, triangle, scalars({1, 2, 3}), scalars({0, 1, 2}));
        auto v = check_thm_qgens(h, k, 3);
        EXPECT_EQ(v.status, Status::pass);
        const std::vector<Matrix> gens{h, k};
        EXPECT_EQ(algebra_dimension(gens), 81u);
    }
}

TEST(QGenerators, SuppliedWitnesses)
{
    auto [h, k] = generic_witness(2, 3, graph_from(2, {{0, 1}, {1, 0}}), scalars({1, 2}), scalars({0, 1, 2}));
    QWitnesses w{{Word(2, {{0, 0, 0}})}, Word(2, {{0, 0, 2}})};
    auto v = check_thm_qgens(h, k, 2, 1, w);
    ASSERT_EQ(v.status, Status::pass);
    EXPECT_EQ(v.witnesses.loop_words, w.loop_words);
    EXPECT_EQ(*v.witnesses.separating_word, Word(2, {{0, 0, 2}}));
}

TEST(QGenerators, MultiplicityFailure)
{
    auto [h, k] = generic_witness(2, 3, graph_from(2, {{0, 1}, {1, 0}}), scalars({1, 2}), scalars({0, 1, 2}));
    auto v = check_thm_qgens(h, Matrix::diagonal({0, 0, 0, 1, 2, 2}), 2);
    EXPECT_EQ(v.status, Status::inconclusive);
    EXPECT_EQ(v.conditions.back().name, "mult_p");
    EXPECT_THROW(check_thm_qgens(h, k, 4), std::invalid_argument);
}

TEST(GenericWitness, Shape)
{
    auto [h, k] = generic_witness(1, 2, BurnsideGraph(1), scalars({1}), scalars({1, 2}));
    EXPECT_EQ(h, (Matrix{{0, 1}, {1, 1}}));
    EXPECT_EQ(k, Matrix::diagonal({1, 2}));

    auto cycle = graph_from(3, {{0, 1}, {1, 2}, {2, 0}});
    auto [h3, k3] = generic_witness(3, 3, cycle, scalars({1, 2, 3}), scalars({5, 6, 7}));
    EXPECT_EQ(p_block(h3, 3, 0, 0), (Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
    EXPECT_EQ(p_block(h3, 3, 1, 2), Matrix::diagonal({1, 2, 3}));
    EXPECT_EQ(k3, Matrix::diagonal({5, 5, 5, 6, 6, 6, 7, 7, 7}));
    const std::vector<Matrix> gens{h3, k3};
    EXPECT_EQ(algebra_dimension(gens), 81u);
}

TEST(GenericWitness, Errors)
{
    auto two = graph_from(2, {{0, 1}, {1, 0}});
    EXPECT_THROW(generic_witness(2, 2, graph_from(2, {{0, 1}}), scalars({1, 2}), scalars({0, 1})),
                 std::invalid_argument);
    EXPECT_THROW(generic_witness(2, 2, two, scalars({1, 1}), scalars({0, 1})), std::invalid_argument);
    EXPECT_THROW(generic_witness(2, 2, two, scalars({1, -2}), scalars({0, 1})), std::invalid_argument);
    EXPECT_THROW(generic_witness(2, 2, two, scalars({1, 2}), scalars({1, 1})), std::invalid_argument);
    EXPECT_THROW(generic_witness(3, 2, two, scalars({1, 2}), scalars({0, 1})), std::invalid_argument);
}

TEST(Laffey, Outcomes)
{
    for (std::size_t n = 2; n <= 6; ++n) {
        Matrix cyc(n, n);
        std::vector<Scalar> d;
        for (std::size_t i = 0; i < n; ++i) {
            cyc(i, (i + 1) % n) = Scalar(1);
            d.push_back(Scalar(static_cast<long>(i + 1)));
        }
        const std::vector<Matrix> set{cyc};
        EXPECT_EQ(check_laffey(set, Matrix::diagonal(d)).status, Status::pass);
        const std::vector<Matrix> gens{cyc, Matrix::diagonal(d)};
        EXPECT_TRUE(is_full_algebra(gens));
    }
    const std::vector<Matrix> tri{Matrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}};
    auto v = check_laffey(tri, Matrix::diagonal({1, 2, 3}));
    EXPECT_EQ(v.status, Status::fail_obstructed);
    EXPECT_TRUE(v.witnesses.permutation);
    EXPECT_EQ(check_laffey(std::vector<Matrix>{Matrix{{4}}}, Matrix{{1}}).status, Status::pass);
}

TEST(Laffey, DistinctDiagonalWithStronglyConnectedAdjacency)
{
    // A_1 diagonal with distinct entries, A_2 the adjacency matrix of a
    // strongly connected graph.
    const Matrix a1 = Matrix::diagonal({3, 1, 4, 5});
    const Matrix a2{{0, 1, 0, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, 0}};
    const std::vector<Matrix> set{a2};
    EXPECT_EQ(check_laffey(set, a1).status, Status::pass);
    const std::vector<Matrix> gens{a1, a2};
    EXPECT_EQ(algebra_dimension(gens), 16u);
}

TEST(Laffey, Errors)
{
    const std::vector<Matrix> set{Matrix::identity(3)};
    EXPECT_THROW(check_laffey(set, Matrix::diagonal({1, 1, 2})), std::invalid_argument);
    EXPECT_THROW(check_laffey(set, Matrix{{1, 1, 0}, {0, 2, 0}, {0, 0, 3}}), std::invalid_argument);
    EXPECT_THROW(check_laffey(set, Matrix::diagonal({1, 2})), std::invalid_argument);
}

TEST(Soundness, RandomPassesAreFull)
{
    random::Engine rng(101);
    int passes = 0;
    for (int t = 0; t < 200 && passes < 20; ++t) {
        const std::size_t half = 2 + t % 2;
        const Matrix h = random::hermitian(rng, 2 * half, 0.7, t % 2 == 0);
        const Matrix k = random::paired_diagonal(rng, half);
        if (check_thm_2gens(h, k).status != Status::pass) continue;
        ++passes;
        const std::vector<Matrix> gens{h, k};
        EXPECT_TRUE(is_full_algebra(gens));
    }
    EXPECT_GT(passes, 0);
}
