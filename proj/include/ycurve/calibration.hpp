#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ycurve/forward_space.hpp"
#include "ycurve/instruments.hpp"
#include "ycurve/interpolation.hpp"

namespace ycurve {

struct LmOptions {
    double lambda0 = 1e-3;
    double lambda_up = 2.0;
    double lambda_down = 0.3;
    double residual_tol = 1e-11; // on the max-norm of the residuals
    double step_tol = 1e-14;     // on the max-norm of the step
    int max_iterations = 200;
    double fd_step = 1e-7; // scaled by max(1, |x_j|) per column
};

struct LmResult {
    std::vector<double> x;
    std::vector<double> residuals;
    double max_abs_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Damped Gauss-Newton least squares with a forward-difference Jacobian.
/// The damping factor multiplies the diagonal of J^T J and adapts
/// multiplicatively on step acceptance/rejection.
LmResult levenberg_marquardt(
    const std::function<std::vector<double>(std::span<const double>)>& residual_fn,
    std::vector<double> x0, const LmOptions& opts = {});

/// Global calibration setup: one free log-discount value per quote, knots
/// at the instrument maturities (futures anchor their period end), plus the
/// fixed z(0) = 0 knot.
struct CalibrationProblem {
    Date valuation;
    std::vector<Quote> quotes;
    SlopeScheme scheme = SlopeScheme::C2Natural;
    /// When set, residuals are priced through the forward-space curve built
    /// from the candidate z values instead of through the z spline.  The
    /// parameters stay the same; the two routes price identically.
    std::optional<ForwardSplineKind> forward_pricing;
    int lavery_samples_per_interval = 17;
    /// The Lavery scheme runs an LP inside every residual evaluation; it
    /// must be enabled explicitly.
    bool enable_lavery = false;
    LmOptions lm;
};

struct CalibrationResult {
    ZeroCurve curve;
    std::vector<double> residuals; // model par minus market par, per quote
    int iterations = 0;
    bool converged = false;
};

/// Knot times of the calibrated curve, excluding the fixed t = 0 knot;
/// strictly increasing, one per quote.
std::vector<double> calibration_knot_times(const CalibrationProblem& problem);

/// Curve implied by a candidate parameter vector (z at the instrument
/// knots).  Shared by the residual function and by diagnostics.
ZeroCurve curve_from_parameters(const CalibrationProblem& problem,
                                std::span<const double> z_params);

/// Forward-space view of the same candidate point: discrete forwards from
/// the z differences on the {0} + knot grid.
ForwardSplineCurve forward_curve_from_parameters(const CalibrationProblem& problem,
                                                 std::span<const double> z_params,
                                                 ForwardSplineKind kind);

/// Residual vector at a candidate point: model par rate minus market par
/// rate, quote by quote, all in rate units.
std::vector<double> residuals(std::span<const double> z_params,
                              const CalibrationProblem& problem);

CalibrationResult calibrate(const CalibrationProblem& problem);

} // namespace ycurve
