#pragma once

// Sufficient conditions for a pair (H, K) of hermitian matrices to generate the
// full matrix algebra, with witness certificates. Block indices are 0-based.
//
// Every checker expects K already diagonal. Its eigenvalues must be grouped so
// that no value occurs in two different p-blocks; the block-indicator
// polynomials of eigen_projector_polys exist exactly then.

#include "burnside/graph.hpp"
#include "burnside/matrix.hpp"
#include "burnside/polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

inline constexpr std::size_t default_max_word_len = 3;

struct WordStep {
    std::size_t matrix; // index into the matrix set
    std::size_t row;    // block row
    std::size_t col;    // block column

    friend auto operator<=>(const WordStep&, const WordStep&) = default;
};

/// A chained product of p-blocks: the column of each step is the row of the next.
class Word {
public:
    Word(std::size_t p, std::vector<WordStep> steps) : p_(p), steps_(std::move(steps))
    {
        if (steps_.empty()) throw std::invalid_argument("a word needs at least one step");
        for (std::size_t t = 1; t < steps_.size(); ++t)
            if (steps_[t - 1].col != steps_[t].row)
                throw std::invalid_argument("word steps do not chain at step " + std::to_string(t + 1));
    }

    std::size_t p() const { return p_; }
    const std::vector<WordStep>& steps() const { return steps_; }
    std::size_t length() const { return steps_.size(); }
    std::size_t base() const { return steps_.front().row; }
    std::size_t end() const { return steps_.back().col; }
    bool closed() const { return base() == end(); }

    Word extended(std::size_t matrix, std::size_t col) const
    {
        auto steps = steps_;
        steps.push_back({matrix, end(), col});
        return Word(p_, std::move(steps));
    }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::size_t p_;
    std::vector<WordStep> steps_;
};

/// Product of the designated p-blocks.
inline Matrix eval_word(const Word& w, std::span<const Matrix> h_set)
{
    Matrix acc;
    bool first = true;
    for (const auto& s : w.steps()) {
        if (s.matrix >= h_set.size()) throw std::out_of_range("word refers to a missing matrix");
        Matrix block = p_block(h_set[s.matrix], w.p(), s.row, s.col);
        acc = first ? std::move(block) : acc * block;
        first = false;
    }
    return acc;
}

namespace detail {

// nonzero[m][i * n + j]: block (i, j) of matrix m is nonzero.
inline std::vector<std::vector<bool>> nonzero_blocks(std::span<const Matrix> h_set, std::size_t p)
{
    require_same_square_size(h_set);
    const std::size_t n = block_count(h_set.front(), p);
    std::vector<std::vector<bool>> nz(h_set.size(), std::vector<bool>(n * n));
    for (std::size_t m = 0; m < h_set.size(); ++m)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) nz[m][i * n + j] = !p_block(h_set[m], p, i, j).is_zero();
    return nz;
}

} // namespace detail

/// All words of length 1..max_len over nonzero blocks, based at `base` and
/// (optionally) ending at `end`. Ordered by length, then lexicographically by
/// steps (matrix, row, col).
inline std::vector<Word> enumerate_words(std::span<const Matrix> h_set, std::size_t p, std::size_t base,
                                         std::size_t max_len, std::optional<std::size_t> end = std::nullopt)
{
    const auto nz = detail::nonzero_blocks(h_set, p);
    const std::size_t n = block_count(h_set.front(), p);
    if (base >= n) throw std::out_of_range("word base out of range");
    std::vector<Word> out;
    if (max_len == 0) return out;

    std::vector<Word> level;
    for (std::size_t m = 0; m < h_set.size(); ++m)
        for (std::size_t c = 0; c < n; ++c)
            if (nz[m][base * n + c]) level.emplace_back(p, std::vector<WordStep>{{m, base, c}});
    for (std::size_t len = 1;; ++len) {
        for (const auto& w : level)
            if (!end || w.end() == *end) out.push_back(w);
        if (len == max_len) break;
        std::vector<Word> next;
        for (const auto& w : level)
            for (std::size_t m = 0; m < h_set.size(); ++m)
                for (std::size_t c = 0; c < n; ++c)
                    if (nz[m][w.end() * n + c]) next.push_back(w.extended(m, c));
        level = std::move(next);
    }
    return out;
}

/// Block-indices are valid, every block is nonzero.
inline bool word_is_valid(const Word& w, std::span<const Matrix> h_set)
{
    const auto nz = detail::nonzero_blocks(h_set, w.p());
    const std::size_t n = block_count(h_set.front(), w.p());
    return std::all_of(w.steps().begin(), w.steps().end(), [&](const WordStep& s) {
        return s.matrix < h_set.size() && s.row < n && s.col < n && nz[s.matrix][s.row * n + s.col];
    });
}

// ---------------------------------------------------------------------------
// Multiplicity condition

/// True iff no diagonal value of k occurs more than p times.
inline bool check_mult_p(const Matrix& k, std::size_t p)
{
    if (!k.is_diagonal()) throw std::invalid_argument("multiplicity check needs a diagonal matrix");
    const auto d = k.diagonal_entries();
    for (std::size_t i = 0; i < d.size(); ++i)
        if (static_cast<std::size_t>(std::count(d.begin(), d.end(), d[i])) > p) return false;
    return true;
}

/// True iff no diagonal value of k appears in two different p-blocks.
inline bool eigenvalues_block_aligned(const Matrix& k, std::size_t p)
{
    if (!k.is_diagonal()) throw std::invalid_argument("alignment check needs a diagonal matrix");
    block_count(k, p);
    const auto d = k.diagonal_entries();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] == d[j] && i / p != j / p) return false;
    return true;
}

/// q_i with q_i(K) = I_p at block (i, i) and zero elsewhere (Lagrange
/// interpolation over the distinct diagonal values).
inline std::vector<UniPoly> eigen_projector_polys(const Matrix& k_diag, std::size_t p)
{
    const std::size_t n = block_count(k_diag, p);
    if (!eigenvalues_block_aligned(k_diag, p))
        throw std::invalid_argument("eigenvalue groups are not consecutive within p-blocks");
    const auto d = k_diag.diagonal_entries();
    std::vector<Scalar> distinct;
    for (const auto& x : d)
        if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);

    auto lagrange = [&](const Scalar& node) {
        UniPoly l = UniPoly::constant(Scalar(1));
        for (const auto& other : distinct) {
            if (other == node) continue;
            l = l * UniPoly::linear_factor(other) * (Scalar(1) / (node - other));
        }
        return l;
    };

    std::vector<UniPoly> polys;
    for (std::size_t i = 0; i < n; ++i) {
        UniPoly q;
        std::vector<Scalar> seen;
        for (std::size_t t = i * p; t < (i + 1) * p; ++t) {
            if (std::find(seen.begin(), seen.end(), d[t]) != seen.end()) continue;
            seen.push_back(d[t]);
            q += lagrange(d[t]);
        }
        polys.push_back(std::move(q));
    }
    return polys;
}

// ---------------------------------------------------------------------------
// Prefix-sum partitions and the invertible top-row block condition

struct LPartition {
    std::vector<std::size_t> parts;

    std::size_t total() const
    {
        std::size_t s = 0;
        for (auto l : parts) s += l;
        return s;
    }
    friend bool operator==(const LPartition&, const LPartition&) = default;
};

/// l1 = l2 = 1, non-decreasing, and every later part equals some proper prefix sum.
inline bool is_l_partition(std::span<const std::size_t> parts)
{
    if (parts.size() < 2 || parts[0] != 1 || parts[1] != 1) return false;
    std::vector<std::size_t> prefix{parts[0]};
    for (std::size_t j = 1; j < parts.size(); ++j) {
        if (parts[j] < parts[j - 1]) return false;
        if (j >= 2 && std::find(prefix.begin(), prefix.end(), parts[j]) == prefix.end()) return false;
        prefix.push_back(prefix.back() + parts[j]);
    }
    return true;
}

/// Every partition of n satisfying is_l_partition, in lexicographic order.
inline std::vector<LPartition> enumerate_l_partitions(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("prefix-sum partitions need n >= 2");
    std::vector<LPartition> out;
    std::vector<std::size_t> parts{1, 1};
    std::vector<std::size_t> prefix{1, 2};

    // Candidate next parts are prefix sums >= the last part, ascending; that
    // keeps the depth-first walk in lexicographic order.
    auto walk = [&](auto&& self) -> void {
        const std::size_t sum = prefix.back();
        if (sum == n) {
            out.push_back({parts});
            return;
        }
        std::vector<std::size_t> candidates;
        for (auto s : prefix)
            if (s >= parts.back() && sum + s <= n) candidates.push_back(s);
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (auto c : candidates) {
            parts.push_back(c);
            prefix.push_back(sum + c);
            self(self);
            parts.pop_back();
            prefix.pop_back();
        }
    };
    walk(walk);
    return out;
}

/// The top-row blocks under `partition`: block i covers rows [0, p*l_i) and the
/// next p*l_i columns.
inline bool satisfies_l_p(const Matrix& h, std::size_t p, const LPartition& partition)
{
    const std::size_t n = block_count(h, p);
    if (partition.total() != n || !is_l_partition(partition.parts)) return false;
    std::size_t col = 0;
    for (auto l : partition.parts) {
        const std::size_t size = p * l;
        if (!is_invertible(h.submatrix(0, col, size, size))) return false;
        col += size;
    }
    return true;
}

/// First partition (lexicographic) whose top-row blocks are all invertible.
inline std::optional<LPartition> check_l_p(const Matrix& h, std::size_t p)
{
    const std::size_t n = block_count(h, p);
    if (n < 2) return std::nullopt;
    for (auto& part : enumerate_l_partitions(n))
        if (satisfies_l_p(h, p, part)) return part;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Corner elements and the non-commuting pair

/// How a word based at block 0 yields a hermitian element of the (0, 0) corner.
enum class CornerForm {
    gram,        // w w*
    symmetrized, // w + w*, closed words only
};

struct CornerElement {
    Word word;
    CornerForm form = CornerForm::gram;

    friend bool operator==(const CornerElement&, const CornerElement&) = default;
};

inline Matrix corner_value(const CornerElement& e, std::span<const Matrix> h_set)
{
    const Matrix w = eval_word(e.word, h_set);
    if (e.form == CornerForm::gram) return w * w.conj_transpose();
    if (!e.word.closed()) throw std::invalid_argument("symmetrized corner form needs a closed word");
    return w + w.conj_transpose();
}

struct NoncommutingPair {
    CornerElement first;
    CornerElement second;
    Matrix commutator; // [value(first), value(second)]
};

/// Candidates in word order; each word contributes w w*, then w + w* if closed.
inline std::vector<CornerElement> corner_candidates(std::span<const Matrix> h_set, std::size_t p, std::size_t max_len)
{
    std::vector<CornerElement> out;
    for (auto& w : enumerate_words(h_set, p, 0, max_len)) {
        const bool closed = w.closed();
        out.push_back({w, CornerForm::gram});
        if (closed) out.push_back({std::move(w), CornerForm::symmetrized});
    }
    return out;
}

/// First pair (by position of the later element, then the earlier one) of
/// corner elements from structurally distinct words that do not commute.
inline std::optional<NoncommutingPair> find_noncommuting_pair(std::span<const Matrix> h_set, std::size_t p,
                                                              std::size_t max_len)
{
    const auto candidates = corner_candidates(h_set, p, max_len);
    std::vector<Matrix> values;
    values.reserve(candidates.size());
    for (const auto& c : candidates) values.push_back(corner_value(c, h_set));
    for (std::size_t j = 1; j < candidates.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
            if (candidates[i].word == candidates[j].word) continue;
            Matrix c = commutator(values[i], values[j]);
            if (!c.is_zero()) return NoncommutingPair{candidates[i], candidates[j], std::move(c)};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class Theorem { two_generators, q_generators, laffey };
enum class Status { pass, fail_obstructed, inconclusive };

inline const char* to_string(Theorem t)
{
    switch (t) {
    case Theorem::two_generators: return "2gens";
    case Theorem::q_generators: return "qgens";
    case Theorem::laffey: return "laffey";
    }
    return "?";
}

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail_obstructed: return "FAIL_OBSTRUCTED";
    case Status::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct ConditionCheck {
    std::string name;
    bool holds = false;
    std::string detail;
};

struct Witnesses {
    std::optional<LPartition> partition;
    std::vector<CornerElement> corner_pair;
    std::optional<Matrix> commutator;
    std::vector<Word> loop_words;
    std::optional<Word> separating_word;
    /// Burnside-form relabeling exhibiting the obstruction (FAIL_OBSTRUCTED).
    std::optional<std::vector<std::size_t>> permutation;
};

/// PASS certifies the full algebra; FAIL_OBSTRUCTED certifies it is not full;
/// INCONCLUSIVE is never a disproof.
struct CriteriaVerdict {
    explicit CriteriaVerdict(Theorem t = Theorem::two_generators) : theorem(t) {}

    Theorem theorem;
    Status status = Status::inconclusive;
    std::string reason;
    std::vector<ConditionCheck> conditions;
    Witnesses witnesses;
};

namespace detail {

inline void require_hermitian_pair(const Matrix& h, const Matrix& k)
{
    if (!h.is_square() || !k.is_square() || h.rows() != k.rows())
        throw std::invalid_argument("h and k must be square and of equal size");
    if (!h.is_hermitian()) throw std::invalid_argument("h must be hermitian");
    if (!k.is_hermitian()) throw std::invalid_argument("k must be hermitian");
    if (!k.is_diagonal())
        throw std::invalid_argument("k must be diagonal; supply h and k in the basis that diagonalizes k");
}

// Shared prefix: obstruction, multiplicity and top-row conditions.
// Returns false when the verdict is already decided.
inline bool common_conditions(CriteriaVerdict& v, const Matrix& h, const Matrix& k, std::size_t p)
{
    const std::vector<Matrix> pair{h, k};
    auto obstruction = obstruction_verdict(pair);
    v.conditions.push_back({"strongly_connected", obstruction.strongly_connected, ""});
    if (!obstruction.strongly_connected) {
        v.status = Status::fail_obstructed;
        v.reason = "Burnside graph of {h, k} is not strongly connected";
        v.witnesses.permutation = obstruction.permutation;
        return false;
    }

    const bool mult = check_mult_p(k, p);
    const bool aligned = eigenvalues_block_aligned(k, p);
    v.conditions.push_back({"mult_p", mult && aligned,
                            !mult ? "an eigenvalue of k exceeds multiplicity p"
                                  : (!aligned ? "an eigenvalue of k spans two p-blocks" : "")});
    if (!(mult && aligned)) {
        v.reason = "multiplicity condition on k fails";
        return false;
    }

    v.witnesses.partition = check_l_p(h, p);
    v.conditions.push_back({"l_p", v.witnesses.partition.has_value(), ""});
    if (!v.witnesses.partition) {
        v.reason = "no prefix-sum partition with invertible top-row blocks";
        return false;
    }
    return true;
}

inline bool valid_corner_pair(const CornerElement& a, const CornerElement& b, std::span<const Matrix> h_set,
                              Matrix& comm)
{
    for (const auto* e : {&a, &b}) {
        if (e->word.base() != 0 || !word_is_valid(e->word, h_set)) return false;
        if (e->form == CornerForm::symmetrized && !e->word.closed()) return false;
    }
    if (a.word == b.word) return false;
    comm = commutator(corner_value(a, h_set), corner_value(b, h_set));
    return !comm.is_zero();
}

} // namespace detail

/// Even-order constructibility: hermitian 2n x 2n h, k with k diagonal.
/// Conditions: multiplicity <= 2, invertible top-row blocks under a prefix-sum
/// partition, and two non-commuting hermitian corner elements from words.
inline CriteriaVerdict check_thm_2gens(const Matrix& h, const Matrix& k,
                                       std::size_t max_word_len = default_max_word_len,
                                       std::optional<std::pair<CornerElement, CornerElement>> supplied = {})
{
    detail::require_hermitian_pair(h, k);
    if (h.rows() % 2 != 0) throw std::invalid_argument("even-order check needs an even matrix size");
    CriteriaVerdict v{Theorem::two_generators};
    if (!detail::common_conditions(v, h, k, 2)) return v;

    const std::vector<Matrix> h_set{h};
    Matrix comm;
    if (supplied && detail::valid_corner_pair(supplied->first, supplied->second, h_set, comm)) {
        v.witnesses.corner_pair = {supplied->first, supplied->second};
        v.witnesses.commutator = comm;
    } else if (auto found = find_noncommuting_pair(h_set, 2, max_word_len)) {
        v.witnesses.corner_pair = {found->first, found->second};
        v.witnesses.commutator = found->commutator;
    }
    const bool have_pair = !v.witnesses.corner_pair.empty();
    v.conditions.push_back({"noncommuting_words", have_pair,
                            have_pair ? "" : "bounded word search up to length " + std::to_string(max_word_len)});
    if (!have_pair) {
        v.reason = "no non-commuting corner pair within the word-length bound";
        return v;
    }
    v.status = Status::pass;
    return v;
}

struct QWitnesses {
    std::vector<Word> loop_words;
    std::optional<Word> separating_word;
};

namespace detail {

inline bool loop_graph_connected(std::span<const Word> loops, std::span<const Matrix> h_set, std::size_t q)
{
    if (q == 1) return true;
    std::vector<Matrix> values;
    for (const auto& w : loops) values.push_back(eval_word(w, h_set));
    if (values.empty()) return false;
    return scc(build_graph(values)).strongly_connected();
}

inline bool separates(const Word& w, std::span<const Matrix> h_set)
{
    const Matrix x = eval_word(w, h_set);
    const Matrix g = x * x.conj_transpose();
    if (!g.is_diagonal()) return false;
    auto d = g.diagonal_entries();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] == d[j]) return false;
    return true;
}

} // namespace detail

/// q-block constructibility: hermitian qn x qn h, k with k diagonal.
/// Conditions: closed words at block 0 whose q x q values form a strongly
/// connected graph; multiplicity <= q; invertible top-row blocks; and a word w
/// based at 0 with w w* diagonal with q distinct entries.
inline CriteriaVerdict check_thm_qgens(const Matrix& h, const Matrix& k, std::size_t q,
                                       std::size_t max_word_len = default_max_word_len,
                                       std::optional<QWitnesses> supplied = {})
{
    detail::require_hermitian_pair(h, k);
    block_count(h, q);
    CriteriaVerdict v{Theorem::q_generators};
    if (!detail::common_conditions(v, h, k, q)) return v;

    const std::vector<Matrix> h_set{h};
    auto usable = [&](const Word& w, bool closed) {
        return w.p() == q && w.base() == 0 && (!closed || w.closed()) && word_is_valid(w, h_set);
    };

    // Closed words whose q x q values give a strongly connected graph.
    std::vector<Word> loops;
    if (supplied && std::all_of(supplied->loop_words.begin(), supplied->loop_words.end(),
                                [&](const Word& w) { return usable(w, true); })
        && detail::loop_graph_connected(supplied->loop_words, h_set, q)) {
        loops = supplied->loop_words;
    } else if (q > 1) {
        BurnsideGraph g(q);
        for (auto& w : enumerate_words(h_set, q, 0, max_word_len, 0)) {
            const Matrix x = eval_word(w, h_set);
            const auto before = g.edges().size();
            for (std::size_t i = 0; i < q; ++i)
                for (std::size_t j = 0; j < q; ++j)
                    if (i != j && !x(i, j).is_zero()) g.add_edge(i, j);
            if (g.edges().size() > before) loops.push_back(std::move(w));
            if (scc(g).strongly_connected()) break;
        }
        if (!scc(g).strongly_connected()) loops.clear();
    }
    const bool loops_ok = detail::loop_graph_connected(loops, h_set, q);
    v.conditions.push_back({"loop_words_strongly_connected", loops_ok, ""});
    v.witnesses.loop_words = loops;

    std::optional<Word> sep;
    if (supplied && supplied->separating_word && usable(*supplied->separating_word, false)
        && detail::separates(*supplied->separating_word, h_set)) {
        sep = supplied->separating_word;
    } else {
        for (auto& w : enumerate_words(h_set, q, 0, max_word_len))
            if (detail::separates(w, h_set)) {
                sep = std::move(w);
                break;
            }
    }
    v.conditions.push_back({"separating_word", sep.has_value(), ""});
    v.witnesses.separating_word = sep;

    if (!loops_ok || !sep) {
        v.reason = !loops_ok ? "no closed words with a strongly connected graph within the bound"
                             : "no word with diagonal w w* and distinct entries within the bound";
        return v;
    }
    v.status = Status::pass;
    return v;
}

/// With b_diag diagonal with distinct entries, the algebra generated by
/// a_set and b_diag is full iff the graph of a_set is strongly connected.
inline CriteriaVerdict check_laffey(std::span<const Matrix> a_set, const Matrix& b_diag)
{
    require_same_square_size(a_set);
    if (!b_diag.is_diagonal() || b_diag.rows() != a_set.front().rows())
        throw std::invalid_argument("b must be diagonal and match the matrix size");
    const auto d = b_diag.diagonal_entries();
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] == d[j]) throw std::invalid_argument("b has a repeated diagonal entry");

    CriteriaVerdict v{Theorem::laffey};
    v.conditions.push_back({"distinct_diagonal", true, ""});
    auto obstruction = obstruction_verdict(a_set);
    v.conditions.push_back({"strongly_connected", obstruction.strongly_connected, ""});
    if (obstruction.strongly_connected) {
        v.status = Status::pass;
    } else {
        v.status = Status::fail_obstructed;
        v.reason = "Burnside graph of the set is not strongly connected";
        v.witnesses.permutation = obstruction.permutation;
    }
    return v;
}

/// Builds (H, K) of size qn: the top-left q-block of H is the adjacency matrix
/// of word_graph, every other q-block is diag(h_values), and
/// K = diag(k_1 I_q, ..., k_n I_q).
inline std::pair<Matrix, Matrix> generic_witness(std::size_t q, std::size_t n, const BurnsideGraph& word_graph,
                                                 std::span<const Scalar> h_values, std::span<const Scalar> k_values)
{
    if (q == 0 || n == 0) throw std::invalid_argument("q and n must be positive");
    if (word_graph.node_count() != q || !scc(word_graph).strongly_connected())
        throw std::invalid_argument("word graph must have q nodes and be strongly connected");
    if (h_values.size() != q || k_values.size() != n)
        throw std::invalid_argument("need q values for h and n values for k");
    for (std::size_t i = 0; i < q; ++i) {
        if (!h_values[i].is_real() || sgn(h_values[i].re()) <= 0)
            throw std::invalid_argument("h values must be positive rationals");
        for (std::size_t j = i + 1; j < q; ++j)
            if (h_values[i] == h_values[j]) throw std::invalid_argument("h values must be distinct");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (k_values[i] == k_values[j]) throw std::invalid_argument("k values must be distinct");

    Matrix adjacency(q, q);
    for (auto [a, b] : word_graph.edges()) adjacency(a, b) = Scalar(1);
    const Matrix fill = Matrix::diagonal(h_values);

    Matrix h(q * n, q * n), k(q * n, q * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) h.set_block(i * q, j * q, (i == 0 && j == 0) ? adjacency : fill);
        for (std::size_t t = 0; t < q; ++t) k(i * q + t, i * q + t) = k_values[i];
    }
    return {h, k};
}

} // namespace burnside
