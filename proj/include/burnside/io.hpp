#pragma once

// JSON surfaces. All indices written here are 1-based.
//
//   matrix:  {"ring": "Q" | "Qi", "size": [r, c], "entries": [["p/q", ...], ...]}
//   graph:   {"nodes": n, "edges": [[i, j], ...]}

#include "burnside/criteria.hpp"
#include "burnside/graph.hpp"
#include "burnside/kippenhahn.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace burnside {

using Json = nlohmann::ordered_json;

/// Malformed input, with a location ("line 3", "entries[1][2]") for diagnostics.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where)
    {
    }
    const std::string& where() const { return where_; }

private:
    std::string where_;
};

inline Json to_json(const Matrix& m)
{
    const bool real = std::all_of(m.entries().begin(), m.entries().end(), [](const Scalar& s) { return s.is_real(); });
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        entries.push_back(std::move(row));
    }
    return Json{{"ring", real ? "Q" : "Qi"}, {"size", {m.rows(), m.cols()}}, {"entries", std::move(entries)}};
}

inline Scalar scalar_from_json(const Json& j, const std::string& where)
{
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (!j.is_string()) throw InputError(where, "scalar must be a string like \"p/q\" or \"p/q+r/si\"");
    auto s = Scalar::parse(j.get<std::string>());
    if (!s) throw InputError(where, "bad scalar '" + j.get<std::string>() + "'");
    return *s;
}

inline Matrix matrix_from_json(const Json& j, const std::string& where = "matrix")
{
    if (!j.is_object()) throw InputError(where, "expected a matrix object");
    for (const char* key : {"ring", "size", "entries"})
        if (!j.contains(key)) throw InputError(where, std::string("missing field '") + key + "'");
    const Json& ring = j.at("ring");
    if (!ring.is_string() || (ring != "Q" && ring != "Qi")) throw InputError(where + ".ring", "must be \"Q\" or \"Qi\"");
    const Json& size = j.at("size");
    if (!size.is_array() || size.size() != 2 || !size[0].is_number_unsigned() || !size[1].is_number_unsigned())
        throw InputError(where + ".size", "must be [rows, cols]");
    const std::size_t rows = size[0].get<std::size_t>(), cols = size[1].get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw InputError(where + ".entries", "expected " + std::to_string(rows) + " rows");
    std::vector<Scalar> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string row_where = where + ".entries[" + std::to_string(r) + "]";
        if (!entries[r].is_array() || entries[r].size() != cols)
            throw InputError(row_where, "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string cell = row_where + "[" + std::to_string(c) + "]";
            Scalar s = scalar_from_json(entries[r][c], cell);
            if (ring == "Q" && !s.is_real()) throw InputError(cell, "imaginary entry in a \"Q\" matrix");
            data.push_back(std::move(s));
        }
    }
    return Matrix(rows, cols, std::move(data));
}

/// A matrix set is a single matrix object, an array of them, or
/// {"matrices": [...]}.
inline std::vector<Matrix> matrix_set_from_json(const Json& j)
{
    std::vector<Matrix> out;
    if (j.is_object() && j.contains("matrices")) return matrix_set_from_json(j.at("matrices"));
    if (j.is_object()) {
        out.push_back(matrix_from_json(j));
        return out;
    }
    if (!j.is_array() || j.empty()) throw InputError("input", "expected a matrix or a non-empty array of matrices");
    for (std::size_t k = 0; k < j.size(); ++k) out.push_back(matrix_from_json(j[k], "[" + std::to_string(k) + "]"));
    return out;
}

inline Json to_json(std::span<const Matrix> set)
{
    Json arr = Json::array();
    for (const auto& m : set) arr.push_back(to_json(m));
    return arr;
}

inline Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const std::size_t byte = e.byte == 0 ? 0 : e.byte - 1;
        std::size_t line = 1, column = 1;
        for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column), "invalid JSON");
    }
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

inline std::vector<Matrix> read_matrix_set(const std::string& path)
{
    Json j = read_json_file(path);
    try {
        return matrix_set_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

inline Json to_json(const BurnsideGraph& g)
{
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
    return Json{{"nodes", g.node_count()}, {"edges", std::move(edges)}};
}

inline Json one_based(std::span<const std::size_t> nodes)
{
    Json arr = Json::array();
    for (auto v : nodes) arr.push_back(v + 1);
    return arr;
}

inline Json to_json(const SccDecomposition& d)
{
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(one_based(c));
    Json cond = Json::array();
    for (auto [a, b] : d.condensation_edges) cond.push_back({a + 1, b + 1});
    return Json{{"strongly_connected", d.strongly_connected()}, {"components", std::move(comps)},
                {"condensation_edges", std::move(cond)}};
}

inline const char* to_string(ObstructionCase c)
{
    switch (c) {
    case ObstructionCase::none: return "none";
    case ObstructionCase::disconnected: return "disconnected";
    case ObstructionCase::invariant_subspace: return "invariant_subspace";
    }
    return "?";
}

inline Json to_json(const ObstructionVerdict& v)
{
    Json j{{"strongly_connected", v.strongly_connected},
           {"case", to_string(v.kind)},
           {"components", to_json(v.decomposition)["components"]},
           {"permutation", one_based(v.permutation)}};
    j["invariant_basis_span"] = v.invariant_basis_span ? one_based(*v.invariant_basis_span) : Json(nullptr);
    if (v.block_diagonal_permutation) {
        Json blocks = Json::array();
        for (const auto& b : v.diagonal_blocks) blocks.push_back(one_based(b));
        j["diagonal_blocks"] = std::move(blocks);
        j["block_diagonal_permutation"] = one_based(*v.block_diagonal_permutation);
    }
    j["hermitian_block_diagonal"] = v.hermitian_block_diagonal;
    return j;
}

/// A word is a list of steps [matrix, block_row, block_col], all 1-based.
inline Json to_json(const Word& w)
{
    Json steps = Json::array();
    for (const auto& s : w.steps()) steps.push_back({s.matrix + 1, s.row + 1, s.col + 1});
    return steps;
}

inline const char* to_string(CornerForm f) { return f == CornerForm::gram ? "gram" : "symmetrized"; }

inline Json to_json(const CriteriaVerdict& v)
{
    Json j{{"theorem", to_string(v.theorem)}, {"status", to_string(v.status)}};
    if (!v.reason.empty()) j["reason"] = v.reason;
    Json conds = Json::array();
    for (const auto& c : v.conditions) {
        Json cj{{"name", c.name}, {"holds", c.holds}};
        if (!c.detail.empty()) cj["detail"] = c.detail;
        conds.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conds);

    const auto& w = v.witnesses;
    Json wit = Json::object();
    if (w.partition) wit["partition"] = w.partition->parts;
    Json words = Json::array();
    for (const auto& c : w.corner_pair) words.push_back(to_json(c.word));
    for (const auto& l : w.loop_words) words.push_back(to_json(l));
    if (w.separating_word) words.push_back(to_json(*w.separating_word));
    wit["words"] = std::move(words);
    if (!w.corner_pair.empty()) {
        Json forms = Json::array();
        for (const auto& c : w.corner_pair) forms.push_back(to_string(c.form));
        wit["corner_forms"] = std::move(forms);
    }
    if (w.commutator) wit["commutator"] = to_json(*w.commutator);
    if (!w.loop_words.empty() || w.separating_word) {
        wit["loop_word_count"] = w.loop_words.size();
        wit["has_separating_word"] = w.separating_word.has_value();
    }
    if (w.permutation) wit["diagonalizing_permutation"] = one_based(*w.permutation);
    j["witnesses"] = std::move(wit);
    return j;
}

inline Json to_json(const CounterexampleReport& r)
{
    Json structural_detail = Json::object();
    for (const auto& c : r.structural) structural_detail[c.name] = c.holds;
    Json grid = Json::array();
    for (const auto& s : r.samples)
        grid.push_back(Json{{"x0", s.x0.to_string()},
                            {"y0", s.y0.to_string()},
                            {"char_poly", s.char_poly.to_string("t")},
                            {"perfect_square", s.perfect_square}});
    return Json{{"n", r.params.n},
                {"b", r.params.b.to_string()},
                {"structural", r.structural_ok()},
                {"structural_checks", std::move(structural_detail)},
                {"even_multiplicity", Json{{"grid", std::move(grid)}, {"all_even", r.all_even}}},
                {"criteria", to_json(r.criteria)},
                {"oracle_dimension", r.oracle_dimension},
                {"pass", r.pass()}};
}

} // namespace burnside
