#include <doctest.h>

#include <cmath>

#include "ycurve/interpolation.hpp"
#include "ycurve/lavery.hpp"

using namespace ycurve;

namespace {
const Date kVal = make_date(2019, 11, 6);
}

TEST_CASE("linear data has a zero objective and secant slopes") {
    DateGrid grid(kVal, {0.0, 0.8, 2.0, 3.5});
    std::vector<double> z;
    for (double t : grid.times())
        z.push_back(0.003 - 0.014 * t);
    const auto s = lavery_slopes(grid, z);
    for (double v : s)
        CHECK(v == doctest::Approx(-0.014).epsilon(1e-9));
    CHECK(lavery_objective(grid, z, s) < 1e-10);
}

TEST_CASE("two symmetric intervals stay linear") {
    DateGrid grid(kVal, {0.0, 1.0, 2.0});
    const std::vector<double> z{0.0, 1.0, 2.0};
    const auto s = lavery_slopes(grid, z);
    for (double v : s)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("step data: no oscillation, unlike the natural C2 spline") {
    DateGrid grid(kVal, {0.0, 1.0, 2.0, 3.0, 4.0});
    const std::vector<double> z{0.0, 0.0, 0.0, 1.0, 1.0};

    const auto s_l1 = lavery_slopes(grid, z);
    const PiecewiseCubic p_l1 = hermite_coefficients(grid, z, s_l1);
    const auto s_c2 = c2_natural_slopes(grid, z);
    const PiecewiseCubic p_c2 = hermite_coefficients(grid, z, s_c2);

    double prev = p_l1(0.0);
    double lo = prev, hi = prev;
    double c2_overshoot = 0.0;
    for (int k = 1; k <= 4000; ++k) {
        const double t = 4.0 * k / 4000.0;
        const double v = p_l1(t);
        CHECK(v >= prev - 1e-8); // monotone non-decreasing
        prev = v;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        c2_overshoot = std::max(c2_overshoot, std::max(p_c2(t) - 1.0, -p_c2(t)));
    }
    CHECK(lo >= -1e-8);
    CHECK(hi <= 1.0 + 1e-8);
    // the natural spline overshoots the data range by a measurable amount
    CHECK(c2_overshoot > 1e-4);

    // optimality dominance on the shared discretisation
    const double obj_l1 = lavery_objective(grid, z, s_l1);
    CHECK(obj_l1 <= lavery_objective(grid, z, s_c2) + 1e-12);
    CHECK(obj_l1 <= lavery_objective(grid, z, bessel_slopes(grid, z)) + 1e-12);
}

TEST_CASE("affine invariance of the minimiser") {
    DateGrid grid(kVal, {0.0, 0.7, 1.5, 2.6, 4.0});
    const std::vector<double> z{0.0, 0.31, 0.4, 1.22, 2.05};
    const double a = 2.5, b = 0.01, c = -0.3;
    std::vector<double> transformed;
    for (std::size_t i = 0; i < z.size(); ++i)
        transformed.push_back(a * z[i] + b * grid.times()[i] + c);

    const auto s = lavery_slopes(grid, z);
    const auto st = lavery_slopes(grid, transformed);
    for (std::size_t i = 0; i < s.size(); ++i)
        CHECK(st[i] == doctest::Approx(a * s[i] + b).epsilon(1e-8).scale(1.0));
}

TEST_CASE("objective dominance over classic schemes on generic data") {
    DateGrid grid(kVal, {0.0, 1.0, 1.8, 3.1, 4.4, 5.0});
    const std::vector<double> z{0.0, -0.02, -0.022, -0.05, -0.04, -0.045};
    const auto s = lavery_slopes(grid, z);
    const double obj = lavery_objective(grid, z, s);
    CHECK(obj <= lavery_objective(grid, z, c2_natural_slopes(grid, z)) + 1e-12);
    CHECK(obj <= lavery_objective(grid, z, bessel_slopes(grid, z)) + 1e-12);
    // non-collinear data cannot reach a zero objective
    CHECK(obj > 1e-6);
}

TEST_CASE("spec validation") {
    DateGrid grid(kVal, {0.0, 1.0});
    const std::vector<double> z{0.0, 1.0};
    CHECK_THROWS_AS(lavery_slopes(grid, z, LaverySpec{1}), std::invalid_argument);
    const auto s = lavery_slopes(grid, z, LaverySpec{2});
    CHECK(s[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s[1] == doctest::Approx(1.0).epsilon(1e-9));
}
