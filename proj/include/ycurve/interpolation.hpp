#pragma once

#include <span>
#include <vector>

#include "ycurve/curve.hpp"

namespace ycurve {

/// Slopes s_i of the log-discount spline, one per knot.
using SlopeVector = std::vector<double>;

/// Tridiagonal system, all bands stored full length (sub[0] and
/// super[n-1] are ignored).
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;
};

/// Thomas algorithm, no pivoting.  Throws on a zero pivot; the systems
/// assembled here are strictly diagonally dominant on a valid grid.
std::vector<double> tridiagonal_solve(const TridiagonalSystem& sys);

/// Secant slopes d_i = (z_{i+1} - z_i)/(t_{i+1} - t_i), one per interval.
std::vector<double> divided_differences(const DateGrid& grid,
                                        std::span<const double> values);

/// Assembles the cubic with value z_i and slope s_i at every knot:
///   c0 = z_i, c1 = s_i,
///   c2 = (3 d_i - s_{i+1} - 2 s_i)/h_i,
///   c3 = -(2 d_i - s_{i+1} - s_i)/h_i^2.
PiecewiseCubic hermite_coefficients(const DateGrid& grid,
                                    std::span<const double> values,
                                    std::span<const double> slopes);

/// Interior slope is the slope of the parabola through three consecutive
/// points; ends use the natural boundary condition.
SlopeVector bessel_slopes(const DateGrid& grid, std::span<const double> values);

/// Slopes of the C^2 cubic spline with natural boundary conditions,
/// obtained from a tridiagonal solve.
SlopeVector c2_natural_slopes(const DateGrid& grid, std::span<const double> values);

/// The tridiagonal system behind c2_natural_slopes, parameterised by the
/// per-interval means m_i: its solution v satisfies
///   v_{i-1}/h_{i-1} + 2 v_i (1/h_{i-1} + 1/h_i) + v_{i+1}/h_i
///     = 3 (m_{i-1}/h_{i-1} + m_i/h_i)
/// with natural end rows 2 v_0 + v_1 = 3 m_0 and v_{n-1} + 2 v_n = 3 m_{n-1}.
/// Called with m = d it yields spline slopes; called with m = f^d it yields
/// the node forwards of the matching forward-space spline.
TridiagonalSystem natural_c2_system(const DateGrid& grid,
                                    std::span<const double> interval_means);

/// Weighted-harmonic-mean node forwards, applied in forward space.
/// The mean is used when adjacent discrete forwards have the same sign;
/// a zero node forward is substituted when the signs differ or either
/// input vanishes.
SlopeVector harmonic_slopes(const DateGrid& grid, std::span<const double> values);

/// Rational-limiter node forwards; zero fallback when the adjacent
/// discrete forwards do not have the same strict sign.
SlopeVector rational_limiter_slopes(const DateGrid& grid,
                                    std::span<const double> values);

/// Van Albada limiter node forwards.  Positive whenever both inputs are
/// positive; zero for exactly opposite inputs.
SlopeVector van_albada_slopes(const DateGrid& grid, std::span<const double> values);

/// Builds the log-discount curve for the requested scheme.  A knot at
/// t = 0 with z = 0 is inserted when the grid does not start at zero.
ZeroCurve build_zero_curve(const DateGrid& grid, std::vector<double> z,
                           SlopeScheme scheme, int lavery_samples_per_interval = 17);

} // namespace ycurve
