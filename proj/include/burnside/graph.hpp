#pragma once

// Burnside graph of a matrix set: node i -> node j whenever some matrix has a
// nonzero (i, j) entry, i != j. Nodes are 0-based here; text output is 1-based.

#include "burnside/matrix.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burnside {

using Edge = std::pair<std::size_t, std::size_t>;

class BurnsideGraph {
public:
    BurnsideGraph() = default;
    explicit BurnsideGraph(std::size_t node_count) : nodes_(node_count), out_(node_count) {}

    void add_edge(std::size_t from, std::size_t to)
    {
        if (from >= nodes_ || to >= nodes_) throw std::out_of_range("edge endpoint out of range");
        if (from == to) return; // self-loops are not part of the graph
        if (edges_.insert({from, to}).second) out_[from].push_back(to);
    }

    std::size_t node_count() const { return nodes_; }
    const std::set<Edge>& edges() const { return edges_; }
    bool has_edge(std::size_t from, std::size_t to) const { return edges_.count({from, to}) != 0; }
    const std::vector<std::size_t>& successors(std::size_t node) const { return out_[node]; }

    BurnsideGraph reversed() const
    {
        BurnsideGraph r(nodes_);
        for (auto [a, b] : edges_) r.add_edge(b, a);
        return r;
    }

    friend bool operator==(const BurnsideGraph& a, const BurnsideGraph& b)
    {
        return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
    }

private:
    std::size_t nodes_ = 0;
    std::set<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_;
};

inline void require_same_square_size(std::span<const Matrix> matrices)
{
    if (matrices.empty()) throw std::invalid_argument("matrix set is empty");
    const std::size_t n = matrices.front().rows();
    for (const auto& m : matrices)
        if (!m.is_square() || m.rows() != n)
            throw std::invalid_argument("matrices must be square and of equal size");
}

inline BurnsideGraph build_graph(std::span<const Matrix> matrices)
{
    require_same_square_size(matrices);
    const std::size_t n = matrices.front().rows();
    BurnsideGraph g(n);
    for (const auto& m : matrices)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !m(i, j).is_zero()) g.add_edge(i, j);
    return g;
}

/// Strongly connected components in a topological order of the condensation
/// (every condensation edge goes from an earlier to a later component). Ties
/// between ready components go to the one holding the smallest node. Nodes
/// inside a component are ascending.
struct SccDecomposition {
    std::vector<std::vector<std::size_t>> components;
    std::set<Edge> condensation_edges;
    std::vector<std::size_t> component_of;

    bool strongly_connected() const { return components.size() <= 1; }
};

inline SccDecomposition scc(const BurnsideGraph& g)
{
    const std::size_t n = g.node_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);

    // Iterative Tarjan.
    std::vector<std::size_t> index(n, unvisited), low(n, 0), raw_comp(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> raw;
    std::size_t counter = 0;

    struct Frame {
        std::size_t node;
        std::size_t next_child;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succ = g.successors(f.node);
            if (f.next_child < succ.size()) {
                std::size_t w = succ[f.next_child++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.node] = std::min(low[f.node], index[w]);
                }
                continue;
            }
            const std::size_t v = f.node;
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw_comp[w] = raw.size();
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                raw.push_back(std::move(comp));
            }
            call.pop_back();
            if (!call.empty()) low[call.back().node] = std::min(low[call.back().node], low[v]);
        }
    }

    // Kahn's algorithm over the condensation, smallest member first.
    const std::size_t k = raw.size();
    std::vector<std::set<std::size_t>> cond_out(k);
    std::vector<std::size_t> indeg(k, 0);
    for (auto [a, b] : g.edges()) {
        std::size_t ca = raw_comp[a], cb = raw_comp[b];
        if (ca != cb && cond_out[ca].insert(cb).second) ++indeg[cb];
    }
    using Key = std::pair<std::size_t, std::size_t>; // (smallest node, raw component)
    std::priority_queue<Key, std::vector<Key>, std::greater<>> ready;
    for (std::size_t c = 0; c < k; ++c)
        if (indeg[c] == 0) ready.push({raw[c].front(), c});

    SccDecomposition out;
    out.component_of.assign(n, 0);
    std::vector<std::size_t> position(k);
    while (!ready.empty()) {
        auto [_, c] = ready.top();
        ready.pop();
        position[c] = out.components.size();
        out.components.push_back(raw[c]);
        for (std::size_t d : cond_out[c])
            if (--indeg[d] == 0) ready.push({raw[d].front(), d});
    }
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t v : raw[c]) out.component_of[v] = position[c];
        for (std::size_t d : cond_out[c]) out.condensation_edges.insert({position[c], position[d]});
    }
    return out;
}

/// Weakly connected components, each ascending, ordered by smallest node.
inline std::vector<std::vector<std::size_t>> weak_components(const BurnsideGraph& g)
{
    const std::size_t n = g.node_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges()) parent[find(a)] = find(b);
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> group_of_root(n, static_cast<std::size_t>(-1));
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t r = find(v);
        if (group_of_root[r] == static_cast<std::size_t>(-1)) {
            group_of_root[r] = groups.size();
            groups.emplace_back();
        }
        groups[group_of_root[r]].push_back(v);
    }
    return groups;
}

enum class ObstructionCase {
    none,               // strongly connected: no obstruction from the graph
    disconnected,       // simultaneous block-diagonal shape exists
    invariant_subspace, // connected, but a source component spans an invariant subspace
};

struct ObstructionVerdict {
    bool strongly_connected = true;
    ObstructionCase kind = ObstructionCase::none;
    SccDecomposition decomposition;
    /// New position k holds old node permutation[k]; components are
    /// consecutive and in topological order, so every input becomes block
    /// upper triangular under permute().
    std::vector<std::size_t> permutation;
    /// Nodes of the first (source) component: the span of these basis vectors
    /// is invariant under every input.
    std::optional<std::vector<std::size_t>> invariant_basis_span;
    /// Disconnected case only: weak components and a permutation that makes
    /// every input block diagonal.
    std::vector<std::vector<std::size_t>> diagonal_blocks;
    std::optional<std::vector<std::size_t>> block_diagonal_permutation;
    /// All inputs hermitian and not strongly connected.
    bool hermitian_block_diagonal = false;
};

inline ObstructionVerdict obstruction_verdict(std::span<const Matrix> matrices)
{
    const BurnsideGraph g = build_graph(matrices);
    ObstructionVerdict v;
    v.decomposition = scc(g);
    v.strongly_connected = v.decomposition.strongly_connected();
    for (const auto& comp : v.decomposition.components)
        v.permutation.insert(v.permutation.end(), comp.begin(), comp.end());
    if (v.strongly_connected) return v;

    v.invariant_basis_span = v.decomposition.components.front();
    auto weak = weak_components(g);
    if (weak.size() > 1) {
        v.kind = ObstructionCase::disconnected;
        // Keep the topological order inside each weak component.
        std::vector<std::size_t> perm;
        for (const auto& group : weak) {
            for (std::size_t node : v.permutation)
                if (std::binary_search(group.begin(), group.end(), node)) perm.push_back(node);
        }
        v.diagonal_blocks = std::move(weak);
        v.block_diagonal_permutation = std::move(perm);
    } else {
        v.kind = ObstructionCase::invariant_subspace;
    }
    v.hermitian_block_diagonal =
        std::all_of(matrices.begin(), matrices.end(), [](const Matrix& m) { return m.is_hermitian(); });
    return v;
}

/// Deterministic DOT text: nodes 1..n, then edges in lexicographic order.
inline std::string to_dot(const BurnsideGraph& g, const std::string& name = "burnside")
{
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (std::size_t v = 0; v < g.node_count(); ++v) os << "  " << v + 1 << ";\n";
    for (auto [a, b] : g.edges()) os << "  " << a + 1 << " -> " << b + 1 << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace burnside
