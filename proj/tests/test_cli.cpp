#include "a1deg/cli.hpp"
#include "a1deg/parse.hpp"
#include "a1deg/witt.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace a1deg;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::string trimmed(const std::string& s) {
    auto end = s.find_last_not_of("\n");
    return end == std::string::npos ? "" : s.substr(0, end + 1);
}

const FieldDesc Q = FieldDesc::rationals();

GWClass form(const std::string& text, const FieldDesc& F = Q) { return make_gw_class(parse_matrix(text, F), F); }

// Runs a command with --json and reads the resulting form back.
GWClass json_form(std::vector<std::string> args) {
    args.push_back("--json");
    Result r = run(args);
    REQUIRE(r.code == 0);
    return cli::form_from_json(nlohmann::json::parse(r.out));
}

const std::string kQuartic = "x^4-6*x^2-7*x-6";
const std::string kFermat = "y1^3 + y3^3 + 1; 3*y1^2*y2 + 3*y3^2*y4; 3*y1*y2^2 + 3*y3*y4^2; y2^3 + y4^3 + 1";
const std::string kGrassmannian = "x2 - x1*x3, 1 - x1*x4, x4 - x1 - x3^2, -x2 - x3*x4";

}

TEST_SUITE("cli") {

TEST_CASE("documented examples") {
    CHECK(trimmed(run({"form", "diagonalize", "--field", "QQ", "--matrix", "[[1,3],[3,7]]"}).out) == "<1,-2>");
    CHECK(trimmed(run({"form", "decompose", "--field", "QQ", "--diag", "3,-3,2,5,1,-9"}).out) == "2H + <2> + <5>");
    CHECK(trimmed(run({"degree", "local", "--field", "QQ", "--vars", "x", "--polys", kQuartic, "--ideal", "x-3"}).out) ==
          "<65>");
}

TEST_CASE("exit codes") {
    CHECK(run({"form", "diagonalize", "--matrix", "[[1,1],[1,1]]"}).code == 1);
    CHECK(run({"form", "diagonalize", "--matrix", "[[1,1],[1,"}).code == 2);
    CHECK(run({"form", "diagonalize", "--matrix", "[[1.5]]"}).code == 2);
    CHECK(run({"form", "diagonalize"}).code == 2);
    CHECK(run({"form", "diagonalize", "--matrix", "[[1]]", "--diag", "1"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"form", "invariants", "--field", "GF(12)", "--diag", "1"}).code == 1);
    CHECK(run({"form", "invariants", "--field", "GF(2)", "--diag", "1"}).code == 1);
    CHECK(run({"form", "invariants", "--field", "XX", "--diag", "1"}).code == 2);
    Result bad = run({"degree", "global", "--vars", "x", "--polys", "x^2+2x"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("column 6") != std::string::npos);
    Result nonisolated = run({"degree", "global", "--vars", "x,y", "--polys", "x*y, x"});
    CHECK(nonisolated.code == 1);
    CHECK(nonisolated.err.find("zeros are not isolated") != std::string::npos);
    CHECK(run({"degree", "global", "--field", "RR", "--vars", "x", "--polys", "x^2-2"}).code == 1);
    CHECK(run({"degree", "local", "--vars", "x", "--polys", kQuartic, "--ideal", "x-1"}).code == 1);
    CHECK(run({"symbol", "hilbert", "2", "3", "4"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("form subcommands") {
    Result inv = run({"form", "invariants", "--diag", "3,-3,2,5,1,-9"});
    CHECK(inv.out.find("signature: 2") != std::string::npos);
    CHECK(inv.out.find("hasse_witt: 2:1 5:-1") != std::string::npos);
    CHECK(trimmed(run({"form", "anisotropic-part", "--diag", "3,-3,2,5,1,-9"}).out) == "<2,5>");
    CHECK(trimmed(run({"form", "isomorphic", "<6,-6>", "[[0,1],[1,0]]"}).out) == "true");
    CHECK(trimmed(run({"form", "isomorphic", "--field", "GF(13)", "<2>", "<6>"}).out) == "true");
    CHECK(trimmed(run({"form", "isomorphic", "<1,1>", "<3,3>"}).out) == "false");
    CHECK(trimmed(run({"form", "make", "pfister", "--entries", "2,3"}).out) == "<1,-3,-2,6>");
    CHECK(trimmed(run({"form", "make", "hyperbolic", "--rank", "4"}).out) == "<1,-1,1,-1>");
    CHECK(trimmed(run({"form", "make", "diagonal", "--field", "GF(13)", "--entries", "2,6"}).out) == "<2,6>");
    CHECK(trimmed(run({"symbol", "hilbert", "--", "-1", "-1", "2"}).out) == "-1");
    CHECK(trimmed(run({"symbol", "hilbert", "--", "-1", "-1", "inf"}).out) == "-1");
    CHECK(trimmed(run({"symbol", "hilbert", "2", "7", "7"}).out) == "1");
}

TEST_CASE("polynomial sources: inline, file and stdin") {
    const std::string path = "cli_test_polys.txt";
    {
        std::ofstream f(path);
        f << kQuartic << "\n";
    }
    CHECK(trimmed(run({"degree", "local", "--vars", "x", "--polys", path, "--ideal", "x+2"}).out) == "<-15>");
    std::remove(path.c_str());
    CHECK(trimmed(run({"degree", "local", "--vars", "x", "--polys", "-", "--ideal", "x+2"}, kQuartic).out) == "<-15>");
    CHECK(trimmed(run({"basis", "local", "--vars", "x", "--polys", kQuartic, "--ideal", "x^2+x+1"}).out) == "1, x");
}

TEST_CASE("base change of a degree") {
    Result r = run({"degree", "global", "--vars", "x", "--polys", kQuartic, "--base-change", "RR", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["field"]["name"] == "RR");
    CHECK(j["signature"] == 0);
    CHECK(j["decomposition"] == "2H");
}

TEST_CASE("JSON output re-parses to the in-memory value") {
    const std::vector<std::pair<std::vector<std::string>, GWClass>> cases = {
        {{"form", "diagonalize", "--matrix", "[[1,3],[3,7]]"}, diagonalize(form("[[1,3],[3,7]]")).diagonal},
        {{"form", "invariants", "--matrix", "[[1,3/2],[3/2,-7]]"}, form("[[1,3/2],[3/2,-7]]")},
        {{"form", "decompose", "--diag", "3,-3,2,5,1,-9"}, make_diagonal_form(Q, {3, -3, 2, 5, 1, -9})},
        {{"form", "anisotropic-part", "--diag", "3,-3,2,5,1,-9"}, make_diagonal_form(Q, {2, 5})},
        {{"form", "anisotropic-part", "--diag", "1,-1"}, GWClass::empty(Q)},
        {{"form", "invariants", "--field", "RR", "--diag", "3,-4,7"}, make_diagonal_form(FieldDesc::reals(), {3, -4, 7})},
        {{"form", "make", "pfister", "--entries", "2,-5"},
         make_pfister_form(Q, {Scalar(Rational(2)), Scalar(Rational(-5))})},
        {{"form", "invariants", "--field", "GF(27)", "--matrix", "[[a,1],[1,a^2+2]]"},
         form("[[a,1],[1,a^2+2]]", FieldDesc::finite(3, 3))},
        {{"form", "invariants", "--field", "GF(27)", "--modulus", "2,2,0,1", "--matrix", "[[a,1],[1,2]]"},
         form("[[a,1],[1,2]]", FieldDesc::finite_with_modulus(3, {2, 2, 0, 1}))},
        {{"degree", "global", "--vars", "x", "--polys", kQuartic},
         form("[[-7,-6,0,1],[-6,0,1,0],[0,1,0,0],[1,0,0,0]]")},
    };
    for (const auto& [args, expected] : cases) {
        CAPTURE(args[1]);
        CHECK(json_form(args) == expected);
    }
}

TEST_CASE("JSON fields") {
    Result r = run({"form", "invariants", "--diag", "3,-3,2,5,1,-9", "--json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["rank"] == 6);
    CHECK(j["signature"] == 2);
    CHECK(j["discriminant"] == "10");
    CHECK(j["hasse_witt"]["5"] == -1);
    CHECK(j["witt_index"] == 2);
    CHECK(j["decomposition"] == "2H + <2> + <5>");
    CHECK(j["field"]["characteristic"] == 0);
    auto g = nlohmann::json::parse(run({"form", "invariants", "--field", "GF(27)", "--diag", "1,2", "--json"}).out);
    CHECK(g["field"]["modulus"] == nlohmann::json::array({1, 2, 0, 1}));
    CHECK_FALSE(g.contains("signature"));
    CHECK_FALSE(g.contains("hasse_witt"));
}

// Replays the interactive sessions of the worked examples, comparing
// matrices up to isomorphism and strings exactly.
TEST_CASE("session replay") {
    // forms
    CHECK(json_form({"form", "diagonalize", "--matrix", "[[1,3],[3,7]]"}) == make_diagonal_form(Q, {1, -2}));
    CHECK(json_form({"form", "make", "diagonal", "--field", "GF(13)", "--entries", "2,6"}) ==
          make_diagonal_form(FieldDesc::finite(13), {2, 6}));
    auto real = nlohmann::json::parse(run({"form", "invariants", "--field", "RR", "--diag", "3,-4,7", "--json"}).out);
    CHECK(real["signature"] == 1);
    CHECK(trimmed(run({"form", "isomorphic", "<1,2,-3>", "<1,-1,6>"}).out) == "true");
    auto iso = nlohmann::json::parse(run({"form", "decompose", "--diag", "1,2,-3", "--json"}).out);
    CHECK(iso["witt_index"] == 1);
    CHECK(is_isomorphic_form(json_form({"form", "anisotropic-part", "--diag", "3,-3,2,5,1,-9"}),
                             make_diagonal_form(Q, {2, 5})));
    CHECK(trimmed(run({"form", "decompose", "--diag", "3,-3,2,5,1,-9"}).out) == "2H + <2> + <5>");

    // univariate degrees
    GWClass alpha = json_form({"degree", "global", "--vars", "x", "--polys", kQuartic});
    CHECK(is_isomorphic_form(alpha, form("[[-7,-6,0,1],[-6,0,1,0],[0,1,0,0],[1,0,0,0]]")));
    GWClass a1 = json_form({"degree", "local", "--vars", "x", "--polys", kQuartic, "--ideal", "x^2 + x + 1"});
    GWClass a2 = json_form({"degree", "local", "--vars", "x", "--polys", kQuartic, "--ideal", "x - 3"});
    GWClass a3 = json_form({"degree", "local", "--vars", "x", "--polys", kQuartic, "--ideal", "x + 2"});
    CHECK(is_isomorphic_form(a1, form("[[-5,-7],[-7,-2]]")));
    CHECK(is_isomorphic_form(a2, form("[[65]]")));
    CHECK(is_isomorphic_form(a3, form("[[-15]]")));
    CHECK(is_isomorphic_form(alpha, add_gw(a1, add_gw(a2, a3))));

    // Grassmannian
    auto gr = nlohmann::json::parse(
        run({"degree", "global", "--field", "GF(27)", "--vars", "x1,x2,x3,x4", "--polys", kGrassmannian, "--json"}).out);
    CHECK(gr["rank"] == 6);
    CHECK(gr["decomposition"] == "2H + <1> + <1>");

    // Fermat cubic
    auto fe = nlohmann::json::parse(
        run({"degree", "global", "--vars", "y1,y2,y3,y4", "--polys", kFermat, "--json"}).out);
    CHECK(fe["rank"] == 18);
    CHECK(fe["decomposition"] == "8H + <1> + <1>");
    GWClass beta = json_form(
        {"degree", "local", "--vars", "y1,y2,y3,y4", "--polys", kFermat, "--ideal", "y4, y3 + 1, y2 + 1, y1"});
    CHECK(beta == make_diagonal_form(Q, {81}));
    CHECK(json_form({"form", "anisotropic-part", "--diag", "81"}) == make_diagonal_form(Q, {1}));
    RingPtr Z = PolyRing::make(Q, {"z1", "z2", "z3", "z4"});
    Polynomial fermat = parse_polynomial("(z1 + z4)^3 + (z2 + z3)^3 - z3^3 - z4^3", Z);
    auto restrict_to_line = [&](std::size_t var) {
        return substitute(substitute(derivative(fermat, var), 0, Scalar(Rational(0))), 1, Scalar(Rational(0)));
    };
    Scalar res = resultant_binary_forms(restrict_to_line(0), restrict_to_line(1), 2, 3);
    CHECK(res == Scalar(Rational(81)));
    GWClass line_type = json_form({"form", "make", "diagonal", "--entries", res.to_string()});
    CHECK(is_isomorphic_form(line_type, beta));
    CHECK(trimmed(run({"form", "isomorphic", "<3,-1,3,-1,3,-1,3,-1,3,-1,3,-1,2,-6,2,-6>",
                       "<1,-1,1,-1,1,-1,1,-1,1,-1,1,-1,1,-1,1,-1>"})
                      .out) == "true");
}

}
