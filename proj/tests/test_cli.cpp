#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "tl/cli.hpp"
#include "tl/io.hpp"
#include "tl/jw.hpp"

using namespace tl;

namespace {

std::pair<int, std::string> run(const std::vector<std::string>& args) {
    std::ostringstream out;
    int code = run_cli(args, out);
    return {code, out.str()};
}

}  // namespace

TEST_CASE("mul golden outputs") {
    auto [c1, o1] = run({"mul", "--n", "5", "--ring", "Z", "--a", "7", "U2 U1 U4 U2 U3", "1"});
    CHECK(c1 == 0);
    CHECK(o1 == "1*(U4)(U2 U3)\n");
    auto [c2, o2] = run({"mul", "--n", "2", "--ring", "Z", "--a", "2", "U1", "U1"});
    CHECK(c2 == 0);
    CHECK(o2 == "2*(U1)\n");
    auto [c3, o3] = run({"mul", "--n", "2", "--ring", "Q", "--a", "2", "U1", "1"});
    CHECK(c3 == 0);
    CHECK(o3 == "1*(U1)\n");
}

TEST_CASE("usage errors exit 1") {
    auto [c1, o1] = run({"mul", "--n", "2", "--ring", "Z", "--a", "2", "U7", "U1"});
    CHECK(c1 == 1);
    auto [c2, o2] = run({"mul", "--n", "2", "--ring", "Z", "--a", "2"});
    CHECK(c2 == 1);  // missing words
    auto [c3, o3] = run({"nonsense"});
    CHECK(c3 == 1);
    auto [c4, o4] = run({"wn", "--n", "2", "--ring", "Z", "--a", "2"});
    CHECK(c4 == 1);  // wn requires --v
    auto [c5, o5] = run({"mul", "--n", "2", "--ring", "Z", "--a", "2", "--v", "1", "U1", "U1"});
    CHECK(c5 == 1);  // exactly one of --a/--v
}

TEST_CASE("infeasible configurations exit 2") {
    auto [c1, o1] = run({"verify", "acyclicity", "--complex", "C", "--n", "3", "--m", "2",
                         "--ring", "Z", "--a", "2", "--length", "6"});
    CHECK(c1 == 2);  // C(m) needs a invertible, 2 is not a unit in Z
    CHECK(o1.find("NonInvertibleA") != std::string::npos);
    // resolution budget exceeded (TL_4 has dimension 14 > 10 already)
    setenv("TLHOM_BUDGET", "10", 1);
    auto [c2, o2] = run({"tor", "--n", "4", "--ring", "Q", "--v", "1", "--max-degree", "3"});
    unsetenv("TLHOM_BUDGET");
    CHECK(c2 == 2);
    CHECK(o2.find("DimensionBudgetExceeded") != std::string::npos);
}

TEST_CASE("qbc golden outputs") {
    auto [c1, o1] = run({"qbc", "--n", "4", "--delta-zero"});
    CHECK(c1 == 0);
    CHECK(o1 == "1 0 2 0 1\n");
    auto [c2, o2] = run({"qbc", "--n", "3"});
    CHECK(c2 == 0);
    CHECK(o2 == "[3 0] = 1\n[3 1] = -1 + d^2\n[3 2] = -1 + d^2\n[3 3] = 1\n");
}

TEST_CASE("seq golden outputs") {
    auto [c1, o1] = run({"seq", "jacobsthal", "--upto", "4"});
    CHECK(o1 == "jacobsthal: 1 1 3 5\n");
    auto [c2, o2] = run({"seq", "catalan", "--upto", "6"});
    CHECK(o2 == "catalan: 1 1 2 5 14 42 132\n");
    auto [c3, o3] = run({"seq", "fine", "--upto", "6"});
    CHECK(o3 == "fine: 1 0 1 2 6 18 57\n");
}

TEST_CASE("wn json is schema-stable") {
    auto [code, text] = run({"wn", "--n", "3", "--ring", "Q", "--v", "1", "--json"});
    CHECK(code == 0);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("n") == 3);
    CHECK(j.at("ring") == "Q");
    CHECK(j.at("dims") == nlohmann::json({1, 3, 5, 5}));
    CHECK(j.at("homology").at("-1").at("rank") == 0);
    CHECK(j.at("homology").at("2").at("rank") == 2);
    CHECK(j.at("top_rank") == 2);
    CHECK(j.at("fine_number") == 2);
}

TEST_CASE("tor table and json") {
    auto [c1, o1] = run({"tor", "--n", "2", "--ring", "Z", "--a", "2", "--max-degree", "4"});
    CHECK(c1 == 0);
    CHECK(o1.find("d=0  Z\n") != std::string::npos);
    CHECK(o1.find("d=1  Z/2   <- nonzero") != std::string::npos);
    CHECK(o1.find("d=2  0\n") != std::string::npos);
    auto [c2, o2] = run({"tor", "--n", "3", "--ring", "Fp:2", "--v", "1", "--max-degree", "4", "--json"});
    CHECK(c2 == 0);
    auto j = nlohmann::json::parse(o2);
    CHECK(j.at("tor").size() == 4);
    CHECK(j.at("tor").at(0).at("rank") == 1);
    for (int d = 1; d < 4; ++d) CHECK(j.at("tor").at(d).at("rank") == 0);
}

TEST_CASE("verify subcommands print PASS and exit 0") {
    auto [c1, o1] = run({"verify", "acyclicity", "--complex", "D", "--n", "3", "--m", "2",
                         "--ring", "Z", "--a", "2", "--length", "8"});
    CHECK(c1 == 0);
    CHECK(o1.rfind("PASS", 0) == 0);
    auto [c2, o2] = run({"verify", "tor-sequence", "--n", "2", "--ring", "Fp:2", "--v", "1"});
    CHECK(c2 == 0);
    CHECK(o2.rfind("PASS", 0) == 0);
    auto [c3, o3] = run({"verify", "shifted-iso", "--n", "2", "--ring", "Z", "--v", "1",
                         "--max-degree", "6"});
    CHECK(c3 == 0);
    CHECK(o3.rfind("PASS", 0) == 0);
    // W acyclicity: H_{n-1} is allowed to be nonzero, lower degrees vanish
    auto [c4, o4] = run({"verify", "acyclicity", "--complex", "W", "--n", "4", "--ring", "Fp:5",
                         "--v", "2"});
    CHECK(c4 == 0);
    CHECK(o4.rfind("PASS", 0) == 0);
}

TEST_CASE("save/load round trip reproduces homology") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tlhom_test_save";
    fs::remove_all(dir);
    auto [code, text] = run({"wn", "--n", "3", "--ring", "Fp:5", "--v", "2", "--save", dir.string()});
    CHECK(code == 0);
    auto X = load_complex(dir);
    auto F5 = RingSpec::prime_field(5);
    auto ctx = make_context(F5, FromUnit{RingValue::from_long(F5, 2)});
    auto W = build_W(ctx, 3);
    CHECK(X.dims == W.dims);
    for (int d = 0; d <= 2; ++d) CHECK(X.d(d) == W.d(d));
    CHECK(homology_of(X) == homology_of(W));
    fs::remove_all(dir);
}

TEST_CASE("tlmat round trip") {
    auto Z = RingSpec::integers();
    RingMatrix m = RingMatrix::zero(Z, 3, 2);
    m.set(0, 0, RingValue::from_long(Z, 5));
    m.set(2, 1, RingValue::from_long(Z, -7));
    auto text = matrix_to_tlmat(m);
    CHECK(text == "tlmat 3 2 Z\n1 1 5\n3 2 -7\n");
    CHECK(tlmat_parse(text) == m);
    auto Q = RingSpec::rationals();
    RingMatrix q = RingMatrix::zero(Q, 1, 1);
    q.set(0, 0, RingValue::parse(Q, "3/4"));
    CHECK(tlmat_parse(matrix_to_tlmat(q)) == q);
}

TEST_CASE("diagram json round trip") {
    for (const auto& d : enumerate_diagrams(4)) {
        auto j = diagram_to_json(d);
        CHECK(diagram_from_json(j) == d);
    }
    auto j = diagram_to_json(PlanarDiagram::generator(5, 4));
    CHECK(j.at("n") == 5);
    CHECK(j.at("pairs").at(3) == nlohmann::json({"L4", "L5"}));
}

TEST_CASE("qbc json uses coefficient arrays") {
    std::ostringstream out;
    int code = run_cli({"qbc", "--n", "4", "--json"}, out);
    CHECK(code == 0);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j.at("coefficients").at(1) == nlohmann::json({0, -2, 0, 1}));  // [4 1] = d^3 - 2d
    std::ostringstream out2;
    CHECK(run_cli({"verify", "shifted-iso", "--n", "2", "--ring", "Z", "--v", "1"}, out2) == 0);
    auto body = out2.str();
    auto j2 = nlohmann::json::parse(body.substr(body.find('{')));
    CHECK(j2.at("pass") == true);
}

TEST_CASE("filtration basis labels") {
    auto lbl = filtration_basis(2, 0);
    REQUIRE(lbl.size() == 3);
    CHECK(lbl[0] == std::vector<std::string>{"1"});
    CHECK(lbl[1] == std::vector<std::string>{"1", "(U1)"});
    CHECK(lbl[2] == std::vector<std::string>{"1"});
}

TEST_CASE("fineberg and filtration subcommands") {
    auto [c1, o1] = run({"fineberg", "--n", "2", "--ring", "Z", "--v", "1"});
    CHECK(c1 == 0);
    CHECK(o1.find("dim 1") != std::string::npos);
    auto [c2, o2] = run({"filtration", "--n", "3", "--k", "0", "--ring", "Q", "--v", "1"});
    CHECK(c2 == 0);
    CHECK(o2.find("chain isomorphism") != std::string::npos);
    auto [c3, o3] = run({"resolve", "--n", "2", "--ring", "Z", "--v", "1", "--length", "3"});
    CHECK(c3 == 0);
    CHECK(o3.find("ranks: 1 1 1 1") != std::string::npos);
}

TEST_CASE("jw subcommand") {
    auto [c1, o1] = run({"jw", "--n", "2", "--ring", "Q", "--v", "1"});
    CHECK(c1 == 0);
    CHECK(o1.find("JW_2 = 1*1 + -1/2*(U1)") != std::string::npos);
    auto [c2, o2] = run({"jw", "--n", "4", "--ring", "Fp:2", "--v", "1"});
    CHECK(c2 == 0);
    CHECK(o2.find("absent") != std::string::npos);
}
