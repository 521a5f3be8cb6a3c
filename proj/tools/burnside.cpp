// burnside: command-line front end for matrix algebra generation certificates.
//
// Exit status: 0 success/PASS, 1 FAIL or obstructed, 2 INCONCLUSIVE,
// 3 usage or input error.

#include "burnside/burnside.hpp"
#include "burnside/io.hpp"
#include "burnside/random.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace burnside;

constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_input = 3;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw InputError(path, "cannot open for writing");
    out << text;
}

Scalar parse_rational_flag(const std::string& flag, const std::string& text)
{
    auto s = Scalar::parse(text);
    if (!s || !s->is_real()) throw InputError(flag, "expected a rational like 1/2 or -3, got '" + text + "'");
    return *s;
}

std::vector<GridPoint> parse_grid(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos) throw InputError("--grid", "expected a range a..b");
    try {
        std::size_t used_lo = 0, used_hi = 0;
        long lo = std::stol(text.substr(0, dots), &used_lo);
        long hi = std::stol(text.substr(dots + 2), &used_hi);
        if (used_lo != dots || used_hi != text.size() - dots - 2 || lo > hi) throw std::invalid_argument("");
        return integer_grid(lo, hi);
    } catch (const std::exception&) {
        throw InputError("--grid", "expected integers a <= b in a..b, got '" + text + "'");
    }
}

int status_exit(Status s)
{
    switch (s) {
    case Status::pass: return exit_ok;
    case Status::fail_obstructed: return exit_fail;
    case Status::inconclusive: return exit_inconclusive;
    }
    return exit_input;
}

struct Options {
    std::string input;
    std::string dot;
    std::string k_file;
    std::string theorem = "2gens";
    std::size_t p = 2;
    std::size_t max_word_len = default_max_word_len;
    std::size_t n = 4;
    std::string b = "1";
    std::string out;
    std::string grid = "-2..2";
    std::size_t count = 20;
};

void maybe_dot(const Options& o, const std::vector<Matrix>& set)
{
    if (!o.dot.empty()) write_text(o.dot, to_dot(build_graph(set)));
}

int run_graph(const Options& o)
{
    auto set = read_matrix_set(o.input);
    maybe_dot(o, set);
    emit(to_json(build_graph(set)));
    return exit_ok;
}

int run_scc(const Options& o)
{
    auto set = read_matrix_set(o.input);
    maybe_dot(o, set);
    emit(to_json(scc(build_graph(set))));
    return exit_ok;
}

int run_obstruct(const Options& o)
{
    auto set = read_matrix_set(o.input);
    maybe_dot(o, set);
    auto v = obstruction_verdict(set);
    emit(to_json(v));
    return v.strongly_connected ? exit_ok : exit_fail;
}

int run_oracle(const Options& o)
{
    auto set = read_matrix_set(o.input);
    maybe_dot(o, set);
    const std::size_t n = set.front().rows();
    const std::size_t dim = algebra_dimension(set);
    emit(Json{{"dimension", dim}, {"full", dim == n * n}});
    return dim == n * n ? exit_ok : exit_fail;
}

Matrix single_matrix(const std::string& path)
{
    auto set = read_matrix_set(path);
    if (set.size() != 1) throw InputError(path, "expected exactly one matrix");
    return set.front();
}

int run_certify(const Options& o)
{
    if (o.theorem == "laffey") {
        auto a_set = read_matrix_set(o.input);
        auto v = check_laffey(a_set, single_matrix(o.k_file));
        emit(to_json(v));
        return status_exit(v.status);
    }
    const Matrix h = single_matrix(o.input);
    const Matrix k = single_matrix(o.k_file);
    CriteriaVerdict v = o.theorem == "2gens" ? (o.p != 2 ? throw InputError("--p", "2gens requires p = 2")
                                                         : check_thm_2gens(h, k, o.max_word_len))
                                             : check_thm_qgens(h, k, o.p, o.max_word_len);
    emit(to_json(v));
    return status_exit(v.status);
}

int write_pair(const std::string& out, const Matrix& h, const Matrix& k, Json summary)
{
    const std::vector<Matrix> pair{h, k};
    if (out.empty()) {
        emit(to_json(pair));
        return exit_ok;
    }
    write_text(out, to_json(pair).dump(2) + "\n");
    summary["out"] = out;
    emit(summary);
    return exit_ok;
}

int run_kip_gen(const Options& o)
{
    FamilyParams params{o.n, parse_rational_flag("--b", o.b)};
    auto f = build_family(params);
    return write_pair(o.out, f.h, f.k, Json{{"n", o.n}, {"b", params.b.to_string()}, {"size", 2 * o.n}});
}

int run_kip_verify(const Options& o)
{
    FamilyParams params{o.n, parse_rational_flag("--b", o.b)};
    auto grid = parse_grid(o.grid);
    auto report = verify_counterexample(params, grid, o.max_word_len);
    emit(to_json(report));
    return report.pass() ? exit_ok : exit_fail;
}

int run_laffey(const Options& o)
{
    auto [h, k] = laffey_pair();
    return write_pair(o.out, h, k, Json{{"size", 8}});
}

// Randomized soundness checks: every obstruction must agree with the oracle,
// and every PASS must be confirmed by it.
int run_self_test(const Options& o)
{
    std::uint64_t seed = 20240601;
    if (const char* env = std::getenv("BURNSIDE_SEED")) seed = std::strtoull(env, nullptr, 10);
    random::Engine rng(seed);
    std::size_t failures = 0, obstructed = 0, passed = 0;
    for (std::size_t t = 0; t < o.count; ++t) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 5)(rng);
        auto set = random::block_triangular_set(rng, n, 2);
        const bool sc = obstruction_verdict(set).strongly_connected;
        if (sc || algebra_dimension(set) >= n * n) ++failures;
        ++obstructed;

        const std::size_t half = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
        const Matrix h = random::hermitian(rng, 2 * half, 0.8);
        const Matrix k = random::paired_diagonal(rng, half);
        if (check_thm_2gens(h, k).status == Status::pass) {
            ++passed;
            const std::vector<Matrix> pair{h, k};
            if (!is_full_algebra(pair)) ++failures;
        }
    }
    emit(Json{{"seed", seed},
              {"obstruction_cases", obstructed},
              {"criteria_passes_checked", passed},
              {"failures", failures}});
    return failures == 0 ? exit_ok : exit_fail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certificates for matrix algebra generation via Burnside graphs"};
    app.require_subcommand(1);
    Options o;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "matrix set JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--dot", o.dot, "write the Burnside graph as DOT");
    };
    auto* graph = app.add_subcommand("graph", "Burnside graph of a matrix set");
    auto* scc_cmd = app.add_subcommand("scc", "strongly connected components");
    auto* obstruct = app.add_subcommand("obstruct", "obstruction verdict and Burnside-form permutation");
    auto* oracle = app.add_subcommand("oracle", "dimension of the generated algebra");
    for (auto* s : {graph, scc_cmd, obstruct, oracle}) with_input(s);

    auto* certify = app.add_subcommand("certify", "check a sufficient condition for the full algebra");
    certify->add_option("--input", o.input, "H (or the matrix set for --theorem laffey)")
        ->required()
        ->check(CLI::ExistingFile);
    certify->add_option("--k", o.k_file, "diagonal K (or B for --theorem laffey)")->required()->check(CLI::ExistingFile);
    certify->add_option("--p", o.p, "block size")->check(CLI::PositiveNumber);
    certify->add_option("--theorem", o.theorem)->check(CLI::IsMember({"2gens", "qgens", "laffey"}));
    certify->add_option("--max-word-len", o.max_word_len);

    auto* kip_gen = app.add_subcommand("kip-gen", "emit the counterexample pair [H, K]");
    kip_gen->add_option("--n", o.n, "half-size, n >= 4")->required();
    kip_gen->add_option("--b", o.b, "nonzero rational parameter")->required();
    kip_gen->add_option("--out", o.out, "output file");

    auto* kip_verify = app.add_subcommand("kip-verify", "verify the counterexample claims");
    kip_verify->add_option("--n", o.n, "half-size, n >= 4")->required();
    kip_verify->add_option("--b", o.b, "nonzero rational parameter")->required();
    kip_verify->add_option("--grid", o.grid, "integer sample range a..b for x0 and y0");
    kip_verify->add_option("--max-word-len", o.max_word_len);

    auto* laffey = app.add_subcommand("laffey", "emit Laffey's 8x8 pair [H, K]");
    laffey->add_option("--out", o.out, "output file");

    auto* self_test = app.add_subcommand("self-test", "randomized soundness checks (seed: BURNSIDE_SEED)");
    self_test->add_option("--count", o.count, "number of random trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*graph) return run_graph(o);
        if (*scc_cmd) return run_scc(o);
        if (*obstruct) return run_obstruct(o);
        if (*oracle) return run_oracle(o);
        if (*certify) return run_certify(o);
        if (*kip_gen) return run_kip_gen(o);
        if (*kip_verify) return run_kip_verify(o);
        if (*laffey) return run_laffey(o);
        if (*self_test) return run_self_test(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
