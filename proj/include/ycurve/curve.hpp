#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ycurve/dates.hpp"

namespace ycurve {

/// Valuation date plus a strictly increasing grid of curve times
/// (ACT/365-fixed year fractions from the valuation date).
class DateGrid {
public:
    DateGrid(Date valuation, std::vector<double> times);

    static DateGrid from_dates(Date valuation, const std::vector<Date>& dates);

    Date valuation() const { return valuation_; }
    const std::vector<double>& times() const { return times_; }
    std::size_t size() const { return times_.size(); }
    std::size_t intervals() const { return times_.size() - 1; }
    double front() const { return times_.front(); }
    double back() const { return times_.back(); }

private:
    Date valuation_;
    std::vector<double> times_;
};

/// Piecewise cubic in local form
///   p_i(t) = c0 + c1 (t - t_i) + c2 (t - t_i)^2 + c3 (t - t_i)^3
/// on [t_i, t_{i+1}).  Outside the knot span the curve continues as the
/// C^1 linear extension (value and slope matched at the boundary knots).
class PiecewiseCubic {
public:
    using Coeffs = std::array<double, 4>;

    PiecewiseCubic(std::vector<double> knots, std::vector<Coeffs> coeffs);

    double operator()(double t) const;
    double derivative(double t) const;        // right-limit at knots
    double second_derivative(double t) const; // zero in the linear extensions
    double third_derivative(double t) const;

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<Coeffs>& coefficients() const { return coeffs_; }

    /// Index of the interval containing t, clamped to [0, intervals-1].
    /// Knot t_i belongs to [t_i, t_{i+1}).
    std::size_t locate(double t) const;

private:
    std::vector<double> knots_;
    std::vector<Coeffs> coeffs_;
    double right_value_ = 0.0; // last piece evaluated at the final knot
    double right_slope_ = 0.0;
};

/// Slope interpolation scheme for the log-discount spline.
enum class SlopeScheme {
    Bessel,
    C2Natural,
    Harmonic,
    RationalLimiter,
    VanAlbada,
    Lavery,
};

const char* to_string(SlopeScheme scheme);

/// Curve state at a single time.
struct CurveSample {
    double t = 0.0;
    double discount = 0.0;
    double zero = 0.0;                // -z(t)/t, continuously compounded
    double inst_forward = 0.0;        // -z'(t)
    double second_deriv_forward = 0.0; // -z'''(t)
};

/// Log-discount curve: knot values z(t_i) = ln P(t_i) together with the
/// piecewise cubic interpolating them.  Immutable after construction;
/// concurrent reads are safe.
class ZeroCurve {
public:
    ZeroCurve(DateGrid grid, std::vector<double> z, PiecewiseCubic pp,
              SlopeScheme scheme);

    Date valuation() const { return grid_.valuation(); }
    const DateGrid& grid() const { return grid_; }
    const std::vector<double>& log_discounts() const { return z_; }
    const PiecewiseCubic& spline() const { return pp_; }
    SlopeScheme scheme() const { return scheme_; }

    /// ln P(t).  Linear extrapolation outside the knot span.
    double log_discount(double t) const;
    /// P(t) = exp(z(t)); requires t >= 0.
    double discount(double t) const;
    /// Continuously compounded zero rate -z(t)/t for t > 0.
    double zero_rate(double t) const;
    /// Instantaneous forward -z'(t); constant beyond the boundary knots.
    double instantaneous_forward(double t) const;
    /// Continuously compounded forward over [u, v]: -(z(v) - z(u))/(v - u).
    double discrete_forward_cc(double u, double v) const;
    /// Single-period (simple) forward: (P(u)/P(v) - 1)/accrual.
    double discrete_forward_simple(double u, double v, double accrual) const;

    CurveSample sample(double t) const;

private:
    DateGrid grid_;
    std::vector<double> z_;
    PiecewiseCubic pp_;
    SlopeScheme scheme_;
};

} // namespace ycurve
