#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ycurve/simplex.hpp"

using namespace ycurve;

TEST_CASE("one-variable bound: min x subject to x >= 3") {
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {1.0};
    lp.rows.push_back({{1.0}, Relation::GreaterEq, 3.0});
    const auto sol = simplex_solve(lp);
    REQUIRE(sol.status == SimplexStatus::Optimal);
    CHECK(sol.x[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sol.objective == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sol.feasibility_residual < 1e-9);
}

TEST_CASE("absolute value via split variables") {
    // min y+ + y- with y+ - y- = 5, both nonnegative: objective 5
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1.0, 1.0};
    lp.lower_bounds = {0.0, 0.0};
    lp.rows.push_back({{1.0, -1.0}, Relation::Equal, 5.0});
    const auto sol = simplex_solve(lp);
    REQUIRE(sol.status == SimplexStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("free variables work through the internal split") {
    // min x + y with x + y >= 2, x - y = 0.5, both free
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1.0, 1.0};
    lp.rows.push_back({{1.0, 1.0}, Relation::GreaterEq, 2.0});
    lp.rows.push_back({{1.0, -1.0}, Relation::Equal, 0.5});
    const auto sol = simplex_solve(lp);
    REQUIRE(sol.status == SimplexStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(2.0).epsilon(1e-11));
    CHECK(sol.x[0] == doctest::Approx(1.25).epsilon(1e-10));
    CHECK(sol.x[1] == doctest::Approx(0.75).epsilon(1e-10));
}

TEST_CASE("infeasible and unbounded are distinguished") {
    LinearProgram infeasible;
    infeasible.num_vars = 1;
    infeasible.objective = {1.0};
    infeasible.rows.push_back({{1.0}, Relation::GreaterEq, 3.0});
    infeasible.rows.push_back({{1.0}, Relation::LessEq, 1.0});
    CHECK(simplex_solve(infeasible).status == SimplexStatus::Infeasible);

    LinearProgram unbounded;
    unbounded.num_vars = 1;
    unbounded.objective = {-1.0};
    unbounded.rows.push_back({{1.0}, Relation::GreaterEq, 3.0});
    CHECK(simplex_solve(unbounded).status == SimplexStatus::Unbounded);
}

TEST_CASE("input validation") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {1.0}; // wrong length
    CHECK_THROWS_AS(simplex_solve(lp), std::invalid_argument);

    lp.objective = {1.0, std::numeric_limits<double>::infinity()};
    CHECK_THROWS_AS(simplex_solve(lp), std::invalid_argument);
}

TEST_CASE("random bounded programs match vertex enumeration") {
    std::mt19937_64 rng(79);
    int solved = 0;
    for (int rep = 0; rep < 60; ++rep) {
        const LinearProgram lp = oracle::random_bounded_lp(rng);
        const auto sol = simplex_solve(lp);
        REQUIRE(sol.status == SimplexStatus::Optimal);
        CHECK(sol.feasibility_residual < 1e-9);
        const auto expected = oracle::vertex_enumeration_optimum(lp);
        REQUIRE(expected.has_value());
        CHECK(sol.objective ==
              doctest::Approx(*expected).epsilon(1e-9).scale(1.0 + std::abs(*expected)));
        ++solved;
    }
    CHECK(solved == 60);
}
