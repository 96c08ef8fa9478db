#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "binomap/errors.hpp"
#include "binomap/poly.hpp"
#include "oracles.hpp"

using namespace binomap;

TEST_CASE("parse: first adjacent minor") {
    PolynomialSystem sys = parse_system("x11*x22 - x21*x12;");
    CHECK(sys.equations.size() == 1);
    CHECK(sys.equations[0].size() == 2);
    CHECK(sys.nvars() == 4);
    CHECK(sys.vars.names == std::vector<std::string>{"x11", "x22", "x21", "x12"});
    CHECK(sys.equations[0][0].coeff == 1);
    CHECK(sys.equations[0][1].coeff == -1);
    CHECK(sys.equations[0][0].exponents == ExponentVector{1, 1, 0, 0});
    CHECK(sys.equations[0][1].exponents == ExponentVector{0, 0, 1, 1});
}

TEST_CASE("parse: zero exponent still registers the variable") {
    PolynomialSystem sys = parse_system("x^0;");
    CHECK(sys.nvars() == 1);
    REQUIRE(sys.equations.size() == 1);
    REQUIRE(sys.equations[0].size() == 1);
    CHECK(sys.equations[0][0].coeff == 1);
    CHECK(sys.equations[0][0].exponents == ExponentVector{0});
}

TEST_CASE("parse: duplicate monomials collapse by coefficient addition") {
    PolynomialSystem sys = parse_system("2*a^2*b - 2*a^2*b + a;");
    REQUIRE(sys.equations.size() == 1);
    REQUIRE(sys.equations[0].size() == 1);
    CHECK(sys.equations[0][0].coeff == 1);
    CHECK(sys.equations[0][0].exponents == ExponentVector{1, 0});
}

TEST_CASE("parse: full cancellation is an error") {
    CHECK_THROWS_AS(parse_system("a - a;"), parse_error);
    CHECK_THROWS_AS(parse_system("x + y; 2*b - b - b;"), parse_error);
}

TEST_CASE("parse: rational and Laurent input") {
    PolynomialSystem sys = parse_system("1/2*x^3*y - 7*y^(-2);");
    REQUIRE(sys.equations[0].size() == 2);
    CHECK(sys.equations[0][0].coeff == Rat(1, 2));
    CHECK(sys.equations[0][0].exponents == ExponentVector{3, 1});
    CHECK(sys.equations[0][1].coeff == -7);
    CHECK(sys.equations[0][1].exponents == ExponentVector{0, -2});
    // bare negative exponent accepted too
    CHECK(parse_system("x*y^-1 - 1;").equations[0][0].exponents == ExponentVector{1, -1});
}

TEST_CASE("parse: syntax errors carry position") {
    try {
        parse_system("x + ;\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 5);
    }
    try {
        parse_system("x - y;\nz * * w;");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_system("x/0;"), parse_error);
    CHECK_THROWS_AS(parse_system("x - y"), parse_error);  // missing ';'
}

TEST_CASE("parse: empty input is an empty system") {
    PolynomialSystem sys = parse_system("  \n ");
    CHECK(sys.equations.empty());
    CHECK(serialize_system(sys) == "");
}

TEST_CASE("adjacent_minors: the 2x3 system of two minors") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    CHECK(sys.nvars() == 6);
    REQUIRE(sys.equations.size() == 2);
    CHECK(sys.vars.names ==
          std::vector<std::string>{"x11", "x12", "x13", "x21", "x22", "x23"});
    CHECK(same_system(sys, parse_system("x11*x22 - x21*x12;\nx12*x23 - x22*x13;")));
}

TEST_CASE("adjacent_minors: single minor at 2x2") {
    PolynomialSystem sys = adjacent_minors(2, 2);
    REQUIRE(sys.equations.size() == 1);
    // factors render in variable order (row-major for the generator)
    CHECK(serialize_system(sys) == "x11*x22 - x12*x21;\n");
    CHECK(same_system(sys, parse_system("x11*x22 - x21*x12;")));
}

TEST_CASE("adjacent_minors: 3x3 expands to four minors") {
    PolynomialSystem sys = adjacent_minors(3, 3);
    CHECK(sys.nvars() == 9);
    REQUIRE(sys.equations.size() == 4);
    CHECK(same_system(sys, parse_system("x11*x22 - x21*x12;"
                                        "x12*x23 - x22*x13;"
                                        "x21*x32 - x31*x22;"
                                        "x22*x33 - x32*x23;")));
}

TEST_CASE("adjacent_minors: shape and coefficients in general") {
    for (auto [m, n] : {std::pair{2, 5}, {3, 4}, {4, 4}}) {
        PolynomialSystem sys = adjacent_minors(m, n);
        CHECK(sys.nvars() == m * n);
        CHECK(static_cast<int>(sys.equations.size()) == (m - 1) * (n - 1));
        for (const auto& eq : sys.equations) {
            REQUIRE(eq.size() == 2);
            CHECK(eq[0].coeff == 1);
            CHECK(eq[1].coeff == -1);
        }
    }
}

TEST_CASE("adjacent_minors: rejects boards thinner than 2") {
    CHECK_THROWS_AS(adjacent_minors(1, 3), error);
    CHECK_THROWS_AS(adjacent_minors(2, 1), error);
}

TEST_CASE("adjacent_minors: wide boards get zero-padded names") {
    PolynomialSystem sys = adjacent_minors(2, 12);
    CHECK(sys.vars.names[0] == "x101");
    CHECK(sys.vars.names[11] == "x112");
    CHECK(sys.vars.names[12] == "x201");
    // names stay pairwise distinct
    CHECK(sys.vars.index.size() == sys.vars.names.size());
}

TEST_CASE("serialize: round-trips the generator output") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    CHECK(same_system(parse_system(serialize_system(sys)), sys));
    std::string text = serialize_system(sys);
    CHECK(std::count(text.begin(), text.end(), ';') == 2);
}

TEST_CASE("serialize: negative exponents and rationals re-parse") {
    const char* src = "1/2*x^3*y - 7*y^(-2);\n-x + 3*z;";
    PolynomialSystem sys = parse_system(src);
    CHECK(same_system(parse_system(serialize_system(sys)), sys));
}

TEST_CASE("round-trip property on random binomial systems") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        PolynomialSystem sys = oracle::random_binomial_system(rng);
        PolynomialSystem back = parse_system(serialize_system(sys));
        CHECK(same_system(back, sys));
        // parse output is a serialization fixed point including variable order
        PolynomialSystem again = parse_system(serialize_system(back));
        CHECK(again.vars.names == back.vars.names);
        CHECK(same_system(again, back));
    }
}

TEST_CASE("is_binomial") {
    CHECK(adjacent_minors(2, 4).is_binomial());
    CHECK_FALSE(parse_system("x + y - z;").is_binomial());
    CHECK_FALSE(parse_system("x*y;").is_binomial());
}
