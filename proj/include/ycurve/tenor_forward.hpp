#pragma once

#include <vector>

#include "ycurve/curve.hpp"

namespace ycurve {

/// Sorted union of the grid knots and their tenor-shifted images
/// {t_i} and {t_i + tenor}, deduplicated to 1e-12 years.
DateGrid augment_knots(const DateGrid& grid, double tenor);

/// Piecewise-cubic representation of the constant-tenor forward
///   fbar(t) = -(z(t + tenor) - z(t)) / tenor
/// as a function of the forward period START date t.  Built from a
/// log-discount spline the representation is exact: each piece is the
/// shifted difference of the source polynomials, so fbar is quadratic
/// wherever t and t + tenor fall in the same source interval and cubic in
/// the width-tenor window before each source knot.
class TenorForwardCurve {
public:
    TenorForwardCurve(Date valuation, double tenor, PiecewiseCubic pp);

    /// Natural C^2 spline directly on sampled tenor forwards, for use when
    /// no log-discount spline is available.
    static TenorForwardCurve from_forwards(Date valuation, std::vector<double> knots,
                                           const std::vector<double>& forwards,
                                           double tenor);

    double tenor() const { return tenor_; }
    Date valuation() const { return valuation_; }
    const PiecewiseCubic& spline() const { return pp_; }
    const std::vector<double>& knots() const { return pp_.knots(); }

    double value(double t) const { return pp_(t); }
    double second_derivative(double t) const { return pp_.second_derivative(t); }

private:
    Date valuation_;
    double tenor_;
    PiecewiseCubic pp_;
};

TenorForwardCurve tenor_curve_from_zero_curve(const ZeroCurve& curve, double tenor);

enum class TenorExtrapolation { Constant };

/// Log-discount function recovered from a tenor-forward curve by summing
/// the defining relation down the tenor lattice:
///   z(t) = -stub * r - tenor * sum_{k=1..K} fbar(t - k tenor),
/// K = floor(t/tenor), stub = t - K tenor, with r the constant
/// extrapolation of fbar below its first knot.
class RecoveredLogDiscount {
public:
    RecoveredLogDiscount(TenorForwardCurve curve, TenorExtrapolation extrapolation);

    double log_discount(double t) const;
    double discount(double t) const;
    double stub_rate() const { return stub_rate_; }
    const TenorForwardCurve& tenor_curve() const { return curve_; }

private:
    TenorForwardCurve curve_;
    double stub_rate_;
};

RecoveredLogDiscount zero_curve_from_tenor_curve(const TenorForwardCurve& curve,
                                                 TenorExtrapolation extrapolation);

} // namespace ycurve
