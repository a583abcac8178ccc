#include "a1deg/error.hpp"
#include "a1deg/parse.hpp"
#include "a1deg/poly.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace a1deg;

namespace {

const FieldDesc Q = FieldDesc::rationals();

struct Env {
    RingPtr R;
    explicit Env(std::vector<std::string> vars, FieldDesc F = Q) : R(PolyRing::make(F, std::move(vars))) {}
    Polynomial operator()(const std::string& s) const { return parse_polynomial(s, R); }
    Ideal ideal(const std::string& s) const { return Ideal(R, parse_polynomial_list(s, R)); }
};

bool in_ideal(const Polynomial& f, const Ideal& I) { return groebner_basis(I).contains(f); }

}

TEST_SUITE("poly") {

TEST_CASE("parsing and printing") {
    Env e({"x", "y"});
    CHECK(e("(x+y)^2").to_string() == "x^2+2*x*y+y^2");
    CHECK(e("x - 3*y + -2").to_string() == "x-3*y-2");
    CHECK_THROWS_AS(e("2x"), ParseError);
    CHECK_THROWS_AS(e("x*z"), ParseError);
    try {
        e("x + z");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.column() == 5);
    }
    CHECK_THROWS_AS(e("x +"), ParseError);
    CHECK_THROWS_AS(PolyRing::make(FieldDesc::reals(), {"x"}), DomainError);
}

TEST_CASE("grevlex order") {
    Env e({"x", "y", "z"});
    // x*z < y^2 in grevlex; x^2 > x*y > y^2 > x*z
    CHECK(e("x*z + y^2 + x*y + x^2").to_string() == "x^2+x*y+y^2+x*z");
}

TEST_CASE("Groebner bases") {
    Env e({"x", "y"});
    auto gb = [&](const std::string& s) { return groebner_basis(e.ideal(s)).basis(); };
    CHECK(gb("x^2-1") == std::vector<Polynomial>{e("x^2-1")});
    auto g = gb("x-y, y^2");
    CHECK(std::find(g.begin(), g.end(), e("x-y")) != g.end());
    CHECK(std::find(g.begin(), g.end(), e("y^2")) != g.end());
    CHECK(g.size() == 2);
    CHECK(groebner_basis(e.ideal("1")).is_unit());
    CHECK(groebner_basis(e.ideal("x*y-1, x")).is_unit());
}

TEST_CASE("reduced bases do not depend on generator order or redundancy") {
    Env e({"x", "y", "z"});
    std::vector<Polynomial> gens = parse_polynomial_list("x^2+y*z-2, y^2-x*z+1, z^2-x-y, x*y*z-1", e.R);
    GroebnerBasis ref = groebner_basis(Ideal(e.R, gens));
    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
        std::shuffle(gens.begin(), gens.end(), rng);
        std::vector<Polynomial> more = gens;
        more.push_back(gens[0] * gens[1] + gens[2]);
        CHECK(groebner_basis(Ideal(e.R, more)) == ref);
    }
}

TEST_CASE("normal forms") {
    Env e({"x"});
    GroebnerBasis G = groebner_basis(e.ideal("x^2-1"));
    CHECK(normal_form(e("x^3"), G) == e("x"));
    CHECK(normal_form(e("(x^2-1)*(x+5)"), G).is_zero());
    GroebnerBasis H = groebner_basis(e.ideal("x^4-6*x^2-7*x-6"));
    CHECK(normal_form(e("x^4"), H) == e("6*x^2+7*x+6"));

    Env m({"x", "y"});
    GroebnerBasis K = groebner_basis(m.ideal("x^2-y, y^3-x*y+2"));
    for (const char* f : {"x^5*y", "x^3+y^4", "7*x*y^2-3"}) {
        Polynomial h = m("(x^2-y)*(x+3*y) + (y^3-x*y+2)*x^2");
        CHECK(normal_form(m(f), K) == normal_form(m(f) + h, K));
    }
}

TEST_CASE("ideal quotients") {
    Env e({"x"});
    CHECK(ideals_equal(ideal_quotient(e.ideal("x^2"), e.ideal("x")), e.ideal("x")));
    CHECK(ideals_equal(ideal_quotient(e.ideal("(x^2+x+1)*(x-3)*(x+2)"), e.ideal("x-3")), e.ideal("(x^2+x+1)*(x+2)")));
    Env m({"x", "y"});
    CHECK(ideals_equal(ideal_quotient(m.ideal("x*y"), m.ideal("x")), m.ideal("y")));
    CHECK(ideals_equal(ideal_quotient(m.ideal("x^2, x*y, y^3"), m.ideal("x, y")), m.ideal("x, y^2")));
}

TEST_CASE("saturation") {
    Env e({"x"});
    CHECK(groebner_basis(saturation(e.ideal("x^2"), e.ideal("x"))).is_unit());
    CHECK(ideals_equal(saturation(e.ideal("x^2*(x-1)"), e.ideal("x")), e.ideal("x-1")));
    CHECK(ideals_equal(saturation(e.ideal("x^3-x"), e.ideal("1")), e.ideal("x^3-x")));
}

TEST_CASE("I is contained in (I:J), which is contained in the saturation") {
    Env e({"x", "y"});
    for (const auto& [i, j] : std::vector<std::pair<std::string, std::string>>{
             {"x^2*y, x*y^3", "x, y"}, {"x^3-x*y, y^2*(y-1)", "y"}, {"(x-1)^2*(x+1), y^2-x", "x-1, y-1"}}) {
        Ideal I = e.ideal(i), J = e.ideal(j);
        Ideal quot = ideal_quotient(I, J), sat = saturation(I, J);
        CHECK(ideal_contains(quot, I));
        CHECK(ideal_contains(sat, quot));
        for (const auto& g : quot.generators())
            for (const auto& h : J.generators()) CHECK(in_ideal(g * h, I));
    }
}

TEST_CASE("intersection") {
    Env e({"x", "y"});
    CHECK(ideals_equal(intersect(e.ideal("x"), e.ideal("y")), e.ideal("x*y")));
    CHECK(ideals_equal(intersect(e.ideal("x^2, y"), e.ideal("x, y^2")), e.ideal("x^2, x*y, y^2")));
}

TEST_CASE("standard monomials") {
    Env e({"x"});
    auto sm = standard_monomials(groebner_basis(e.ideal("x^4-6*x^2-7*x-6")));
    REQUIRE(sm.size() == 4);
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(sm[i].exps[0] == i);
    CHECK(standard_monomials(groebner_basis(e.ideal("x-3"))).size() == 1);
    Env m({"x", "y"});
    CHECK_THROWS_WITH_AS(standard_monomials(groebner_basis(m.ideal("x*y"))), "zeros are not isolated", DomainError);
    // univariate dimension equals the degree
    for (const char* f : {"x^5-3*x+1", "x^2+1", "(x-1)^3*(x+2)"}) {
        CHECK(standard_monomials(groebner_basis(e.ideal(f))).size() == e(f).total_degree());
    }
}

TEST_CASE("exact division and substitution") {
    Env e({"x", "y"});
    CHECK(divide_exact(e("x^3-y^3"), e("x-y")) == e("x^2+x*y+y^2"));
    CHECK_THROWS_AS(divide_exact(e("x^3-y^2"), e("x-y")), DomainError);
    CHECK(substitute(e("x^2*y+y"), 0, Scalar(Rational(2))) == e("5*y"));
    CHECK(derivative(e("x^3*y+x"), 0) == e("3*x^2*y+1"));
}

TEST_CASE("univariate resultants") {
    Env e({"x"});
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            Polynomial f = e("x") - Polynomial::constant(e.R, a), g = e("x") - Polynomial::constant(e.R, b);
            CHECK(resultant_univariate(f, g) == Scalar(Rational(a - b)));
        }
    CHECK(resultant_univariate(e("x^2"), e("x-1")) == Scalar(Rational(1)));
}

TEST_CASE("resultant vanishes exactly at common roots") {
    Env e({"x"});
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        // f = (x - r) * u, g = (x - s) * v with small random factors
        long r = d(rng), s = trial % 2 ? r : d(rng);
        Polynomial u = e("x^2") + Polynomial::constant(e.R, d(rng)) * e("x") + Polynomial::constant(e.R, d(rng));
        Polynomial v = e("x") + Polynomial::constant(e.R, d(rng));
        Polynomial f = (e("x") - Polynomial::constant(e.R, r)) * u;
        Polynomial g = (e("x") - Polynomial::constant(e.R, s)) * v;
        // common root iff the gcd is nonconstant, detected via the quotient algebra
        std::size_t gcd_degree = standard_monomials(groebner_basis(Ideal(e.R, {f, g}))).size();
        CHECK(resultant_univariate(f, g).is_zero() == (gcd_degree > 0));
    }
}

TEST_CASE("resultant of the restricted partial derivatives on the Fermat line") {
    Env e({"z1", "z2", "z3", "z4"});
    Polynomial fermat = e("(z1 + z4)^3 + (z2 + z3)^3 - z3^3 - z4^3");
    Polynomial g1 = substitute(substitute(derivative(fermat, 0), 0, Scalar(Rational(0))), 1, Scalar(Rational(0)));
    Polynomial g2 = substitute(substitute(derivative(fermat, 1), 0, Scalar(Rational(0))), 1, Scalar(Rational(0)));
    CHECK(g1 == e("3*z4^2"));
    CHECK(g2 == e("3*z3^2"));
    CHECK(resultant_binary_forms(g1, g2, 2, 3) == Scalar(Rational(81)));
}

}
