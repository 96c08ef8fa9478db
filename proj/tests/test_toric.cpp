#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "binomap/errors.hpp"
#include "binomap/toric.hpp"
#include "oracles.hpp"

using namespace binomap;

namespace {

Selection sel(const PolynomialSystem& sys, std::initializer_list<const char*> names) {
    Selection s;
    for (const char* n : names) s.members.push_back(sys.vars.find(n));
    std::sort(s.members.begin(), s.members.end());
    return s;
}

IntegerMatrix from_rows(std::vector<std::vector<int>> rows, int cols_if_empty = 0) {
    IntegerMatrix A(static_cast<int>(rows.size()),
                    rows.empty() ? cols_if_empty : static_cast<int>(rows[0].size()));
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c) A.at(r, c) = rows[r][c];
    return A;
}

std::vector<int> var_ids(const PolynomialSystem& sys, std::initializer_list<const char*> names) {
    std::vector<int> ids;
    for (const char* n : names) ids.push_back(sys.vars.find(n));
    std::sort(ids.begin(), ids.end());
    return ids;
}

MonomialMap pipeline_map(const PolynomialSystem& sys, const Selection& S, int branch = 0) {
    IncidenceMatrix M = build_incidence(sys);
    ResidualSystem res = residual(sys, M, S);
    SolveResult sol = solve_coefficients(res.A, res.gamma, 4096);
    REQUIRE(sol.consistent);
    REQUIRE(branch < static_cast<int>(sol.solutions.size()));
    return build_map(S, res, kernel_lattice(res.A), sol.solutions[branch], sys.nvars());
}

}  // namespace

TEST_CASE("residual: the paper's selection leaves nothing linked") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    IncidenceMatrix M = build_incidence(sys);
    ResidualSystem res = residual(sys, M, sel(sys, {"x12", "x22"}));
    CHECK(res.A.rows == 0);
    CHECK(res.linked_vars.empty());
    CHECK(res.free_vars == var_ids(sys, {"x11", "x13", "x21", "x23"}));
}

TEST_CASE("residual: the empty selection keeps both minors") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    IncidenceMatrix M = build_incidence(sys);
    ResidualSystem res = residual(sys, M, Selection{});
    REQUIRE(res.A.rows == 2);
    CHECK(res.linked_vars == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(res.free_vars.empty());
    // row of f1 over (x11, x12, x13, x21, x22, x23)
    CHECK(res.A.top_rows(1) == from_rows({{1, -1, 0, -1, 1, 0}}));
    CHECK(res.A.bottom_rows(1) == from_rows({{0, 1, -1, 0, -1, 1}}));
    CHECK(res.gamma == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("residual: one surviving minor on the 2x4 board") {
    PolynomialSystem sys = adjacent_minors(2, 4);
    IncidenceMatrix M = build_incidence(sys);
    ResidualSystem res = residual(sys, M, sel(sys, {"x12", "x22"}));
    CHECK(res.residual_eqs == std::vector<int>{2});
    CHECK(res.A.rows == 1);
    CHECK(res.linked_vars == var_ids(sys, {"x13", "x14", "x23", "x24"}));
    CHECK(res.free_vars == var_ids(sys, {"x11", "x21"}));
}

TEST_CASE("residual: rejects Mixed selections and surviving non-binomials") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    IncidenceMatrix M = build_incidence(sys);
    CHECK_THROWS_AS(residual(sys, M, sel(sys, {"x11"})), invalid_selection_error);

    PolynomialSystem tri = parse_system("x + y - z;");
    IncidenceMatrix Mt = build_incidence(tri);
    CHECK_THROWS_AS(residual(tri, Mt, Selection{}), not_binomial_error);
}

TEST_CASE("residual: gamma sign convention") {
    PolynomialSystem sys = parse_system("2*x - 3*y;");
    ResidualSystem res = residual(sys, build_incidence(sys), Selection{});
    REQUIRE(res.gamma.size() == 1);
    CHECK(res.gamma[0] == Rat(3, 2));  // x/y = 3/2
}

TEST_CASE("solve_coefficients: square roots of unity") {
    SolveResult sol = solve_coefficients(from_rows({{2}}), {Rat(1)}, 64);
    REQUIRE(sol.consistent);
    REQUIRE(sol.solutions.size() == 2);
    CHECK(std::abs(sol.solutions[0][0] - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(sol.solutions[1][0] - Complex{-1.0, 0.0}) < 1e-12);
}

TEST_CASE("solve_coefficients: single ratio equation") {
    SolveResult sol = solve_coefficients(from_rows({{1, -1}}), {Rat(2)}, 64);
    REQUIRE(sol.consistent);
    REQUIRE(sol.solutions.size() == 1);
    CHECK(std::abs(sol.solutions[0][0] - Complex{2.0, 0.0}) < 1e-12);
    CHECK(std::abs(sol.solutions[0][1] - Complex{1.0, 0.0}) < 1e-12);
}

TEST_CASE("solve_coefficients: contradicting ratios are inconsistent") {
    SolveResult sol = solve_coefficients(from_rows({{1, -1}, {-1, 1}}), {Rat(2), Rat(1)}, 64);
    CHECK_FALSE(sol.consistent);
    CHECK(sol.solutions.empty());
}

TEST_CASE("solve_coefficients: branch limit is enforced by exact count") {
    CHECK_THROWS_AS(solve_coefficients(from_rows({{4}}), {Rat(1)}, 3), branch_limit_error);
    try {
        solve_coefficients(from_rows({{6, 0}, {0, 6}}), {Rat(1), Rat(1)}, 10);
        FAIL("expected branch_limit_error");
    } catch (const branch_limit_error& e) {
        CHECK(e.count == "36");
    }
}

TEST_CASE("solve_coefficients: branch count equals |det| on square systems") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> dim(1, 3);
    int tried = 0;
    while (tried < 60) {
        int n = dim(rng);
        IntegerMatrix A = oracle::random_matrix(rng, n, n, -4, 4);
        Int det = oracle::bareiss_det(A);
        if (det == 0) continue;
        ++tried;
        std::vector<Rat> gamma(n, Rat(1));
        SolveResult sol = solve_coefficients(A, gamma, 1 << 20);
        REQUIRE(sol.consistent);
        CHECK(static_cast<Int>(sol.solutions.size()) == oracle::iabs(det));
        // all branches valid and pairwise distinct
        for (std::size_t a = 0; a < sol.solutions.size(); ++a) {
            for (int i = 0; i < n; ++i) {
                Complex lhs{1.0, 0.0};
                for (int j = 0; j < n; ++j) {
                    std::int64_t e = to_i64(A.at(i, j));
                    for (std::int64_t s = 0; s < e; ++s) lhs *= sol.solutions[a][j];
                    for (std::int64_t s = 0; s > e; --s) lhs /= sol.solutions[a][j];
                }
                CHECK(std::abs(lhs - Complex{1.0, 0.0}) < 1e-7);
            }
            for (std::size_t b = a + 1; b < sol.solutions.size(); ++b) {
                double dist = 0;
                for (int j = 0; j < n; ++j) dist += std::abs(sol.solutions[a][j] - sol.solutions[b][j]);
                CHECK(dist > 1e-9);
            }
        }
    }
}

TEST_CASE("solve_coefficients: branch count equals the column Hermite pivot product") {
    std::mt19937_64 rng(88);
    int tried = 0;
    while (tried < 60) {
        IntegerMatrix A = oracle::random_matrix(rng, 2, 3, -4, 4);
        if (hnf(A).rank != 2) continue;
        ++tried;
        HNFResult col = hnf(A.transposed());
        Int pivots = col.H.at(0, 0) * col.H.at(1, 1);
        SolveResult sol = solve_coefficients(A, {Rat(1), Rat(1)}, 1 << 20);
        REQUIRE(sol.consistent);
        CHECK(static_cast<Int>(sol.solutions.size()) == pivots);
    }
}

TEST_CASE("build_map: the paper's free component") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    MonomialMap map = pipeline_map(sys, sel(sys, {"x12", "x22"}));
    CHECK(map.d == 4);
    CHECK(map.zero_set == var_ids(sys, {"x12", "x22"}));
    CHECK(map.free_vars == var_ids(sys, {"x11", "x13", "x21", "x23"}));
    for (int k : map.free_vars) {
        CHECK(map.coeffs[k] == Complex{1.0, 0.0});
        int ones = 0;
        for (int i = 0; i < map.d; ++i) ones += map.exponents.at(i, k) != 0;
        CHECK(ones == 1);
    }
    for (int k : map.zero_set) {
        CHECK(map.coeffs[k] == Complex{0.0, 0.0});
        for (int i = 0; i < map.d; ++i) CHECK(map.exponents.at(i, k) == 0);
    }
    CHECK(verify_map(sys, map, 10, 1e-8, 42));
}

TEST_CASE("build_map: zeroing every variable gives the origin") {
    PolynomialSystem sys = parse_system("x*y - z*w;");
    Selection all = sel(sys, {"x", "y", "z", "w"});
    MonomialMap map = pipeline_map(sys, all);
    CHECK(map.d == 0);
    for (int k = 0; k < 4; ++k) CHECK(map.coeffs[k] == Complex{0.0, 0.0});
    CHECK(verify_map(sys, map, 10, 1e-8, 7));
}

TEST_CASE("build_map: toric component of the 2x3 minors annihilates the system") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    MonomialMap map = pipeline_map(sys, Selection{});
    CHECK(map.d == 4);
    CHECK(map.zero_set.empty());
    CHECK(verify_map(sys, map, 10, 1e-8, 42));
    CHECK(oracle::map_annihilates_symbolically(sys, map));
    CHECK(map.d == sys.nvars() - Selection{}.size() - hnf(residual(sys, build_incidence(sys), Selection{}).A).rank);
}

TEST_CASE("a corrupted exponent breaks verification") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    MonomialMap map = pipeline_map(sys, Selection{});
    map.exponents.at(0, 0) += 1;
    CHECK_FALSE(verify_map(sys, map, 10, 1e-8, 42));
    CHECK_FALSE(oracle::map_annihilates_symbolically(sys, map));
}

TEST_CASE("build_map: dimension mismatches are rejected") {
    PolynomialSystem sys = adjacent_minors(2, 3);
    IncidenceMatrix M = build_incidence(sys);
    ResidualSystem res = residual(sys, M, Selection{});
    IntegerMatrix V = kernel_lattice(res.A);
    std::vector<Complex> wrong(3, Complex{1.0, 0.0});
    CHECK_THROWS_AS(build_map(Selection{}, res, V, wrong, sys.nvars()), error);
}

TEST_CASE("degrees of freedom identity on random selections") {
    std::mt19937_64 rng(5150);
    int done = 0, attempts = 0;
    while (done < 60 && ++attempts < 2000) {
        PolynomialSystem sys = oracle::random_binomial_system(rng, 8, 4);
        IncidenceMatrix M = build_incidence(sys);
        EnumerationOptions opts;
        auto sels = enumerate_consistent(sys, M, opts);
        for (const auto& S : sels) {
            ResidualSystem res = residual(sys, M, S);
            SolveResult sol;
            try {
                sol = solve_coefficients(res.A, res.gamma, 4096);
            } catch (const branch_limit_error&) {
                continue;
            }
            if (!sol.consistent || sol.solutions.empty()) continue;
            bool representable = true;  // coefficients beyond double range cannot be sampled
            for (const Complex& z : sol.solutions[0])
                if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || z == Complex{0.0, 0.0})
                    representable = false;
            if (!representable) continue;
            MonomialMap map = build_map(S, res, kernel_lattice(res.A), sol.solutions[0],
                                        sys.nvars());
            CHECK(map.d == sys.nvars() - S.size() - hnf(res.A).rank);
            CHECK(verify_map(sys, map, 5, 1e-8, 11));
            ++done;
        }
    }
    CHECK(done >= 60);
}
