#pragma once

#include <span>
#include <vector>

#include "ycurve/curve.hpp"

namespace ycurve {

enum class ForwardSplineKind { SmartQuadratic, AreaPreserving };

/// Node forwards of the locally-blended quadratic forward spline:
/// interior f_i mixes the two adjacent discrete forwards by opposite
/// interval lengths, ends use the natural conditions.
std::vector<double> hagan_node_forwards(const DateGrid& grid,
                                        std::span<const double> fd);

/// Node forwards making the area-preserving quadratic C^1 with zero end
/// derivatives; solved from a tridiagonal system.
std::vector<double> area_preserving_node_forwards(const DateGrid& grid,
                                                  std::span<const double> fd);

/// Instantaneous-forward curve built directly in forward space from the
/// discrete forwards f_i^d (one per interval).  Each interval carries a
/// quadratic whose mean over the interval equals f_i^d.  Immutable.
class ForwardSplineCurve {
public:
    static ForwardSplineCurve smart_quadratic(DateGrid grid, std::vector<double> fd);
    static ForwardSplineCurve area_preserving(DateGrid grid, std::vector<double> fd);

    ForwardSplineKind kind() const { return kind_; }
    Date valuation() const { return grid_.valuation(); }
    const DateGrid& grid() const { return grid_; }
    const std::vector<double>& discrete_forwards() const { return fd_; }
    const std::vector<double>& node_forwards() const { return f_; }

    /// Instantaneous forward; flat extrapolation outside the knot span.
    double forward(double t) const;
    /// ln P(t) from the exact per-interval antiderivative, anchored at
    /// z(t_0) = 0 (grids are expected to start at t = 0).
    double log_discount(double t) const;
    double discount(double t) const;

private:
    ForwardSplineCurve(DateGrid grid, std::vector<double> fd, std::vector<double> f,
                       ForwardSplineKind kind);

    DateGrid grid_;
    std::vector<double> fd_;
    std::vector<double> f_;
    std::vector<double> cumulative_z_; // z at knots, z_0 = 0
    ForwardSplineKind kind_;
};

/// Evaluates the blended quadratic g_i(x) + f_i^d.  Requires a
/// SmartQuadratic curve.
double smart_quadratic_eval(const ForwardSplineCurve& curve, double t);

/// Evaluates the area-preserving quadratic
///   f(t) = f_{i-1}(1-x) + f_i x - 3 (f_{i-1} + f_i - 2 f_i^d) x (1-x).
/// Requires an AreaPreserving curve.
double area_preserving_eval(const ForwardSplineCurve& curve, double t);

} // namespace ycurve
