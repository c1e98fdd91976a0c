#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ycurve/equivalence.hpp"
#include "ycurve/interpolation.hpp"

using namespace ycurve;

namespace {

const Date kVal = make_date(2019, 11, 6);

// one-sided second derivatives at an interior knot, from the coefficients
double second_deriv_left(const PiecewiseCubic& pp, std::size_t knot) {
    const auto& c = pp.coefficients()[knot - 1];
    const double h = pp.knots()[knot] - pp.knots()[knot - 1];
    return 2.0 * c[2] + 6.0 * c[3] * h;
}

double second_deriv_right(const PiecewiseCubic& pp, std::size_t knot) {
    return 2.0 * pp.coefficients()[knot][2];
}

} // namespace

TEST_CASE("hermite coefficients reproduce values and slopes") {
    SUBCASE("linear data gives a linear piecewise polynomial") {
        DateGrid grid(kVal, {0.0, 0.7, 1.9, 3.2});
        std::vector<double> z, s;
        for (double t : grid.times()) {
            z.push_back(0.004 - 0.011 * t);
            s.push_back(-0.011);
        }
        const PiecewiseCubic pp = hermite_coefficients(grid, z, s);
        for (const auto& c : pp.coefficients()) {
            CHECK(std::abs(c[2]) < 1e-13);
            CHECK(std::abs(c[3]) < 1e-13);
        }
    }

    SUBCASE("single interval with matching slopes") {
        DateGrid grid(kVal, {0.0, 1.0});
        const PiecewiseCubic pp =
            hermite_coefficients(grid, std::vector<double>{0.0, -0.01},
                                 std::vector<double>{-0.01, -0.01});
        const auto& c = pp.coefficients()[0];
        CHECK(c[0] == 0.0);
        CHECK(c[1] == -0.01);
        CHECK(std::abs(c[2]) < 1e-15);
        CHECK(std::abs(c[3]) < 1e-15);
    }

    SUBCASE("random data: interpolation conditions hold at every knot") {
        std::mt19937_64 rng(17);
        for (int rep = 0; rep < 10; ++rep) {
            const SyntheticCurve synth = make_synthetic_curve(rng);
            std::vector<double> s(synth.grid.size());
            for (double& v : s)
                v = -0.05 + 0.1 * uniform01(rng);
            const PiecewiseCubic pp = hermite_coefficients(synth.grid, synth.z, s);
            const auto& t = synth.grid.times();
            for (std::size_t i = 0; i + 1 < t.size(); ++i) {
                const auto& c = pp.coefficients()[i];
                CHECK(c[0] == synth.z[i]);
                CHECK(c[1] == s[i]);
                const double h = t[i + 1] - t[i];
                const double val = c[0] + h * (c[1] + h * (c[2] + h * c[3]));
                const double slope = c[1] + h * (2.0 * c[2] + 3.0 * h * c[3]);
                CHECK(val == doctest::Approx(synth.z[i + 1]).epsilon(1e-14).scale(1.0));
                CHECK(slope == doctest::Approx(s[i + 1]).epsilon(1e-13).scale(1.0));
            }
        }
    }

    SUBCASE("length mismatch throws") {
        DateGrid grid(kVal, {0.0, 1.0});
        CHECK_THROWS_AS(hermite_coefficients(grid, std::vector<double>{0.0},
                                             std::vector<double>{0.0, 0.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("bessel slopes") {
    SUBCASE("flat secants reproduce the common slope") {
        DateGrid grid(kVal, {0.0, 1.0, 2.0, 3.0});
        std::vector<double> z;
        for (double t : grid.times())
            z.push_back(-0.01 * t);
        const auto s = bessel_slopes(grid, z);
        for (double v : s)
            CHECK(v == doctest::Approx(-0.01).epsilon(1e-14));
    }

    SUBCASE("hand-evaluated three-knot case") {
        // d = (-0.01, -0.03) on a uniform grid
        DateGrid grid(kVal, {0.0, 1.0, 2.0});
        const std::vector<double> z{0.0, -0.01, -0.04};
        const auto s = bessel_slopes(grid, z);
        CHECK(s[1] == doctest::Approx(-0.02).epsilon(1e-14));
        CHECK(s[0] == doctest::Approx(-0.005).epsilon(1e-14));
        CHECK(s[2] == doctest::Approx(-0.035).epsilon(1e-14));
    }

    SUBCASE("interior slopes are exact for a parabola") {
        DateGrid grid(kVal, {0.0, 1.0, 3.0, 4.0, 7.0});
        std::vector<double> z;
        for (double t : grid.times())
            z.push_back(t * t);
        const auto s = bessel_slopes(grid, z);
        for (std::size_t i = 1; i + 1 < s.size(); ++i)
            CHECK(s[i] == doctest::Approx(2.0 * grid.times()[i]).epsilon(1e-14));
    }

    SUBCASE("single interval degenerates to the secant") {
        DateGrid grid(kVal, {0.0, 2.0});
        const auto s = bessel_slopes(grid, std::vector<double>{0.0, -0.02});
        CHECK(s[0] == -0.01);
        CHECK(s[1] == -0.01);
    }
}

TEST_CASE("c2 natural slopes") {
    SUBCASE("linear data") {
        DateGrid grid(kVal, {0.0, 1.0, 2.5, 4.0});
        std::vector<double> z;
        for (double t : grid.times())
            z.push_back(0.002 - 0.013 * t);
        const auto s = c2_natural_slopes(grid, z);
        for (double v : s)
            CHECK(v == doctest::Approx(-0.013).epsilon(1e-13));
        const PiecewiseCubic pp = hermite_coefficients(grid, z, s);
        for (double t = 0.0; t < 4.0; t += 0.05)
            CHECK(std::abs(pp.second_derivative(t)) < 1e-13);
    }

    SUBCASE("three uniform knots against a dense solve") {
        // interior row: s_0 + 4 s_1 + s_2 = 3 (d_0 + d_1), natural end rows
        DateGrid grid(kVal, {0.0, 1.0, 2.0});
        const std::vector<double> z{0.0, 0.0, 1.0};
        const auto s = c2_natural_slopes(grid, z);
        const auto expected = oracle::dense_solve(
            {{2.0, 1.0, 0.0}, {1.0, 4.0, 1.0}, {0.0, 1.0, 2.0}}, {0.0, 3.0, 3.0});
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(s[i] == doctest::Approx(expected[i]).epsilon(1e-14));
    }

    SUBCASE("second derivative is continuous and natural at the ends") {
        std::mt19937_64 rng(23);
        for (int rep = 0; rep < 10; ++rep) {
            const SyntheticCurve synth = make_synthetic_curve(rng);
            const auto s = c2_natural_slopes(synth.grid, synth.z);
            const PiecewiseCubic pp = hermite_coefficients(synth.grid, synth.z, s);
            double scale = 0.0;
            for (std::size_t i = 1; i + 1 < synth.grid.size(); ++i)
                scale = std::max({scale, std::abs(second_deriv_left(pp, i)),
                                  std::abs(second_deriv_right(pp, i))});
            scale = std::max(scale, 1e-8);
            for (std::size_t i = 1; i + 1 < synth.grid.size(); ++i)
                CHECK(std::abs(second_deriv_left(pp, i) - second_deriv_right(pp, i)) <
                      1e-10 * scale);
            CHECK(std::abs(second_deriv_right(pp, 0)) < 1e-10 * scale);
            CHECK(std::abs(second_deriv_left(pp, synth.grid.size() - 1)) <
                  1e-10 * scale);
        }
    }

    SUBCASE("single interval degenerates to linear") {
        DateGrid grid(kVal, {0.0, 2.0});
        const auto s = c2_natural_slopes(grid, std::vector<double>{0.0, -0.02});
        CHECK(s[0] == doctest::Approx(-0.01).epsilon(1e-15));
        CHECK(s[1] == doctest::Approx(-0.01).epsilon(1e-15));
    }
}

TEST_CASE("tridiagonal solver") {
    SUBCASE("identity") {
        TridiagonalSystem sys;
        sys.sub = {0.0, 0.0, 0.0};
        sys.diag = {1.0, 1.0, 1.0};
        sys.super = {0.0, 0.0, 0.0};
        sys.rhs = {4.0, -2.0, 7.0};
        const auto x = tridiagonal_solve(sys);
        CHECK(x == sys.rhs);
    }

    SUBCASE("3x3 against a dense solve") {
        TridiagonalSystem sys;
        sys.sub = {0.0, 1.5, -0.5};
        sys.diag = {4.0, 5.0, 3.0};
        sys.super = {2.0, -1.0, 0.0};
        sys.rhs = {1.0, 2.0, 3.0};
        const auto x = tridiagonal_solve(sys);
        const auto expected = oracle::dense_solve(
            {{4.0, 2.0, 0.0}, {1.5, 5.0, -1.0}, {0.0, -0.5, 3.0}}, sys.rhs);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(x[i] == doctest::Approx(expected[i]).epsilon(1e-13));
    }

    SUBCASE("diagonally dominant 50x50 residual bound") {
        std::mt19937_64 rng(29);
        const std::size_t n = 50;
        TridiagonalSystem sys;
        sys.sub.assign(n, 0.0);
        sys.diag.assign(n, 0.0);
        sys.super.assign(n, 0.0);
        sys.rhs.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0)
                sys.sub[i] = -1.0 + 2.0 * uniform01(rng);
            if (i + 1 < n)
                sys.super[i] = -1.0 + 2.0 * uniform01(rng);
            sys.diag[i] = 3.0 + uniform01(rng); // dominant
            sys.rhs[i] = -5.0 + 10.0 * uniform01(rng);
        }
        const auto x = tridiagonal_solve(sys);
        double rhs_norm = 0.0, res_norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double ax = sys.diag[i] * x[i];
            if (i > 0)
                ax += sys.sub[i] * x[i - 1];
            if (i + 1 < n)
                ax += sys.super[i] * x[i + 1];
            res_norm = std::max(res_norm, std::abs(ax - sys.rhs[i]));
            rhs_norm = std::max(rhs_norm, std::abs(sys.rhs[i]));
        }
        CHECK(res_norm < 1e-12 * rhs_norm);
    }

    SUBCASE("zero pivot throws") {
        TridiagonalSystem sys;
        sys.sub = {0.0, 1.0};
        sys.diag = {0.0, 1.0};
        sys.super = {1.0, 0.0};
        sys.rhs = {1.0, 1.0};
        CHECK_THROWS_AS(tridiagonal_solve(sys), std::runtime_error);
    }
}

namespace {

// grid/values whose discrete forwards are (a, b) around the middle knot
std::pair<DateGrid, std::vector<double>> two_forward_data(double a, double b) {
    DateGrid grid(kVal, {0.0, 1.0, 2.0});
    return {grid, {0.0, -a, -a - b}};
}

} // namespace

TEST_CASE("harmonic slopes") {
    SUBCASE("equal discrete forwards reproduce exactly") {
        auto [grid, z] = two_forward_data(0.013, 0.013);
        const auto s = harmonic_slopes(grid, z);
        CHECK(s[1] == -0.013);
    }

    SUBCASE("uniform spacing gives the plain harmonic mean") {
        auto [grid, z] = two_forward_data(0.01, 0.03);
        const auto s = harmonic_slopes(grid, z);
        const double expected = 2.0 * 0.01 * 0.03 / (0.01 + 0.03);
        CHECK(-s[1] == doctest::Approx(expected).epsilon(1e-13));
        CHECK(-s[1] == doctest::Approx(0.015).epsilon(1e-12));
    }

    SUBCASE("sign change and zero inputs fall back to zero") {
        {
            auto [grid, z] = two_forward_data(0.01, -0.01);
            CHECK(harmonic_slopes(grid, z)[1] == 0.0);
        }
        {
            auto [grid, z] = two_forward_data(0.0, 0.02);
            CHECK(harmonic_slopes(grid, z)[1] == 0.0);
        }
    }

    SUBCASE("boundaries follow the natural end formulas") {
        auto [grid, z] = two_forward_data(0.01, 0.03);
        const auto s = harmonic_slopes(grid, z);
        const double f1 = -s[1];
        CHECK(-s[0] == doctest::Approx(0.01 - 0.5 * (f1 - 0.01)).epsilon(1e-13));
        CHECK(-s[2] == doctest::Approx(0.03 - 0.5 * (f1 - 0.03)).epsilon(1e-13));
    }
}

TEST_CASE("rational limiter slopes") {
    SUBCASE("equal inputs") {
        auto [grid, z] = two_forward_data(0.02, 0.02);
        CHECK(rational_limiter_slopes(grid, z)[1] == -0.02);
    }
    SUBCASE("opposite inputs vanish") {
        auto [grid, z] = two_forward_data(0.02, -0.02);
        CHECK(rational_limiter_slopes(grid, z)[1] == 0.0);
    }
    SUBCASE("hand-evaluated value") {
        auto [grid, z] = two_forward_data(0.01, 0.02);
        // 3 * 0.02 * 0.01 * 0.03 / (4e-4 + 8e-4 + 1e-4) = 1.8e-5 / 1.3e-3
        CHECK(-rational_limiter_slopes(grid, z)[1] ==
              doctest::Approx(0.013846153846153847).epsilon(1e-12));
    }
}

TEST_CASE("van albada slopes") {
    SUBCASE("equal inputs") {
        auto [grid, z] = two_forward_data(0.015, 0.015);
        CHECK(van_albada_slopes(grid, z)[1] == -0.015);
    }
    SUBCASE("exactly opposite inputs vanish") {
        auto [grid, z] = two_forward_data(0.02, -0.02);
        CHECK(van_albada_slopes(grid, z)[1] == 0.0);
    }
    SUBCASE("hand-evaluated value") {
        auto [grid, z] = two_forward_data(0.01, 0.03);
        // ab(a+b)/(a^2+b^2) = 0.01*0.03*0.04/0.001
        CHECK(-van_albada_slopes(grid, z)[1] ==
              doctest::Approx(0.012).epsilon(1e-13));
    }
    SUBCASE("positivity for positive discrete forwards") {
        std::mt19937_64 rng(31);
        for (int rep = 0; rep < 200; ++rep) {
            const double a = 1e-4 + 0.08 * uniform01(rng);
            const double b = 1e-4 + 0.08 * uniform01(rng);
            auto [grid, z] = two_forward_data(a, b);
            CHECK(-van_albada_slopes(grid, z)[1] > 0.0);
        }
    }
}

TEST_CASE("every scheme reproduces linear data and preserves areas") {
    const SlopeScheme schemes[] = {SlopeScheme::Bessel, SlopeScheme::C2Natural,
                                   SlopeScheme::Harmonic, SlopeScheme::RationalLimiter,
                                   SlopeScheme::VanAlbada, SlopeScheme::Lavery};
    DateGrid grid(kVal, {0.0, 0.9, 1.7, 3.0, 4.2});
    std::vector<double> linear;
    for (double t : grid.times())
        linear.push_back(-0.012 * t);

    std::mt19937_64 rng(37);
    const SyntheticCurve synth = make_synthetic_curve(rng);

    for (SlopeScheme scheme : schemes) {
        CAPTURE(to_string(scheme));
        const ZeroCurve lin = build_zero_curve(grid, linear, scheme);
        for (double t = 0.05; t < 4.2; t += 0.11)
            CHECK(std::abs(lin.instantaneous_forward(t) - 0.012) < 1e-13);

        // area preservation depends only on knot interpolation, not slopes
        const ZeroCurve curve = build_zero_curve(synth.grid, synth.z, scheme);
        const auto& t = synth.grid.times();
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            const double h = t[i + 1] - t[i];
            const double m = 0.5 * (t[i] + t[i + 1]);
            const double simpson = (h / 6.0) * (curve.instantaneous_forward(t[i]) +
                                                4.0 * curve.instantaneous_forward(m) +
                                                curve.instantaneous_forward(t[i + 1] -
                                                                             1e-13));
            CHECK(simpson / h == doctest::Approx(synth.fd[i])
                                     .epsilon(1e-10)
                                     .scale(std::max(0.01, std::abs(synth.fd[i]))));
        }
    }
}

TEST_CASE("build_zero_curve inserts the t=0 knot") {
    DateGrid grid(kVal, {0.5, 1.0});
    const ZeroCurve curve =
        build_zero_curve(grid, {-0.005, -0.011}, SlopeScheme::Bessel);
    CHECK(curve.grid().front() == 0.0);
    CHECK(curve.log_discounts().front() == 0.0);
    CHECK(curve.discount(0.0) == 1.0);
    CHECK(curve.log_discount(0.5) == -0.005);
}
