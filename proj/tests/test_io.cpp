#include "burnside/io.hpp"
#include "burnside/random.hpp"
#include "support/fixtures.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace burnside;

namespace {

std::string error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(MatrixJson, Format)
{
    const Matrix m{{1, Scalar::rational(-1, 2)}, {0, 3}};
    const Json j = to_json(m);
    EXPECT_EQ(j.dump(), R"({"ring":"Q","size":[2,2],"entries":[["1","-1/2"],["0","3"]]})");
    const Matrix c{{Scalar(0, 1)}};
    EXPECT_EQ(to_json(c)["ring"], "Qi");
    EXPECT_EQ(to_json(c)["entries"][0][0], "0+1i");
}

TEST(MatrixJson, RoundTrip)
{
    random::Engine rng(107);
    for (int t = 0; t < 50; ++t) {
        Matrix m = random::hermitian(rng, 1 + t % 5, 0.6, t % 2 == 0, -9, 9);
        m *= Scalar::rational(1, 1 + t % 4);
        const Json j = parse_json_text(to_json(m).dump(), "text");
        EXPECT_EQ(matrix_from_json(j), m);
    }
}

TEST(MatrixJson, AcceptsIntegerEntries)
{
    const Json j = Json::parse(R"({"ring":"Q","size":[1,2],"entries":[[1,"2/4"]]})");
    EXPECT_EQ(matrix_from_json(j), (Matrix{{1, Scalar::rational(1, 2)}}));
}

TEST(MatrixJson, Diagnostics)
{
    auto parse = [](const char* text) { return matrix_from_json(Json::parse(text)); };
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"Q","size":[1,1]})"); }), "matrix: missing field 'entries'");
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"R","size":[1,1],"entries":[["1"]]})"); }),
              "matrix.ring: must be \"Q\" or \"Qi\"");
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"Q","size":[1,2],"entries":[["1"]]})"); }),
              "matrix.entries[0]: expected 2 entries");
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"Q","size":[1,1],"entries":[["x"]]})"); }),
              "matrix.entries[0][0]: bad scalar 'x'");
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"Q","size":[1,1],"entries":[["i"]]})"); }),
              "matrix.entries[0][0]: imaginary entry in a \"Q\" matrix");
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"Q","size":[2,1],"entries":[["1"]]})"); }),
              "matrix.entries: expected 2 rows");
    EXPECT_EQ(error_of([&] { parse(R"({"ring":"Q","size":[-1,1],"entries":[]})"); }),
              "matrix.size: must be [rows, cols]");
}

TEST(MatrixSetJson, Shapes)
{
    const Json one = to_json(fixtures::c1());
    EXPECT_EQ(matrix_set_from_json(one).size(), 1u);
    Json arr = Json::array({one, one});
    EXPECT_EQ(matrix_set_from_json(arr).size(), 2u);
    EXPECT_EQ(matrix_set_from_json(Json{{"matrices", arr}}).size(), 2u);
    EXPECT_EQ(error_of([] { matrix_set_from_json(Json::array()); }),
              "input: expected a matrix or a non-empty array of matrices");
    arr.push_back(Json{{"ring", "Q"}});
    EXPECT_EQ(error_of([&] { matrix_set_from_json(arr); }), "[2]: missing field 'size'");
}

TEST(JsonText, ParseErrorsCarryLineAndColumn)
{
    EXPECT_EQ(error_of([] { parse_json_text("[\n  {\"a\": 1,}\n]", "f.json"); }), "f.json:2:11: invalid JSON");
    EXPECT_EQ(error_of([] { read_json_file("/nonexistent/file.json"); }), "/nonexistent/file.json: cannot open file");
}

TEST(GraphJson, OneBased)
{
    BurnsideGraph g(3);
    g.add_edge(2, 0);
    g.add_edge(0, 1);
    EXPECT_EQ(to_json(g).dump(), R"({"nodes":3,"edges":[[1,2],[3,1]]})");
    const auto d = scc(build_graph(fixtures::two_components()));
    EXPECT_EQ(to_json(d)["components"].dump(), "[[3,6],[1,2,4,5]]");
}

TEST(VerdictJson, Fields)
{
    auto v = check_thm_2gens(fixtures::c1(), fixtures::c2());
    const Json j = to_json(v);
    EXPECT_EQ(j["theorem"], "2gens");
    EXPECT_EQ(j["status"], "PASS");
    EXPECT_EQ(j["witnesses"]["partition"].dump(), "[1,1]");
    EXPECT_EQ(j["witnesses"]["words"].dump(), "[[[1,1,1]],[[1,1,2]]]");
    EXPECT_EQ(j["witnesses"]["corner_forms"].dump(), R"(["symmetrized","gram"])");
    EXPECT_EQ(j["conditions"].size(), 4u);

    auto obstructed = to_json(check_thm_2gens(Matrix::identity(4), Matrix::identity(4)));
    EXPECT_EQ(obstructed["status"], "FAIL_OBSTRUCTED");
    EXPECT_EQ(obstructed["witnesses"]["diagonalizing_permutation"].dump(), "[1,2,3,4]");
}

TEST(ReportJson, Fields)
{
    auto r = verify_counterexample({4, Scalar(1)}, integer_grid(0, 1));
    const Json j = to_json(r);
    for (const char* key : {"structural", "even_multiplicity", "criteria", "oracle_dimension", "pass"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["even_multiplicity"]["grid"].size(), 4u);
    EXPECT_EQ(j["oracle_dimension"], 64);
    EXPECT_EQ(j["pass"], true);
}
