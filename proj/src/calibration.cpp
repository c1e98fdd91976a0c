#include "ycurve/calibration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ycurve {

namespace {

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double norm2_sq(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v)
        s += x * x;
    return s;
}

// Dense symmetric solve via Gaussian elimination with partial pivoting;
// systems here are tiny (one row per quote).
std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k]))
                piv = r;
        if (a[piv][k] == 0.0)
            throw std::runtime_error("levenberg_marquardt: singular normal equations");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double m = a[r][k] / a[k][k];
            if (m == 0.0)
                continue;
            for (std::size_t c = k; c < n; ++c)
                a[r][c] -= m * a[k][c];
            b[r] -= m * b[k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        for (std::size_t c = k + 1; c < n; ++c)
            s -= a[k][c] * x[c];
        x[k] = s / a[k][k];
    }
    return x;
}

} // namespace

LmResult levenberg_marquardt(
    const std::function<std::vector<double>(std::span<const double>)>& residual_fn,
    std::vector<double> x0, const LmOptions& opts) {
    const std::size_t n = x0.size();
    std::vector<double> x = std::move(x0);
    std::vector<double> r = residual_fn(x);
    const std::size_t m = r.size();
    if (m < n)
        throw std::invalid_argument("levenberg_marquardt: underdetermined system");

    double lambda = opts.lambda0;
    LmResult result;
    int iter = 0;
    for (; iter < opts.max_iterations; ++iter) {
        if (max_abs(r) < opts.residual_tol)
            break;

        // forward-difference Jacobian, column by column; a failing column
        // is retried once with a wider step
        std::vector<std::vector<double>> jac(m, std::vector<double>(n));
        for (std::size_t j = 0; j < n; ++j) {
            double h = opts.fd_step * std::max(1.0, std::abs(x[j]));
            std::vector<double> rp;
            for (int attempt = 0;; ++attempt) {
                std::vector<double> xp = x;
                xp[j] += h;
                try {
                    rp = residual_fn(xp);
                    break;
                } catch (const std::exception&) {
                    if (attempt >= 1)
                        throw;
                    h *= 16.0;
                }
            }
            for (std::size_t i = 0; i < m; ++i)
                jac[i][j] = (rp[i] - r[i]) / h;
        }

        std::vector<std::vector<double>> jtj(n, std::vector<double>(n, 0.0));
        std::vector<double> jtr(n, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t a = 0; a < n; ++a) {
                jtr[a] += jac[i][a] * r[i];
                for (std::size_t b = a; b < n; ++b)
                    jtj[a][b] += jac[i][a] * jac[i][b];
            }
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < a; ++b)
                jtj[a][b] = jtj[b][a];

        const double base_cost = norm2_sq(r);
        bool accepted = false;
        double step_size = 0.0;
        while (!accepted) {
            auto damped = jtj;
            for (std::size_t a = 0; a < n; ++a) {
                const double d = jtj[a][a];
                damped[a][a] = d + lambda * (d > 1e-300 ? d : 1.0);
            }
            std::vector<double> rhs(n);
            for (std::size_t a = 0; a < n; ++a)
                rhs[a] = -jtr[a];
            const auto step = solve_dense(std::move(damped), std::move(rhs));

            std::vector<double> x_trial = x;
            for (std::size_t a = 0; a < n; ++a)
                x_trial[a] += step[a];
            std::vector<double> r_trial;
            bool trial_ok = true;
            try {
                r_trial = residual_fn(x_trial);
            } catch (const std::exception&) {
                // a failed trial evaluation is a rejected step, not a fatal
                // error; shrink the step and try again
                trial_ok = false;
            }
            if (trial_ok && norm2_sq(r_trial) < base_cost) {
                x = std::move(x_trial);
                r = std::move(r_trial);
                lambda = std::max(1e-12, lambda * opts.lambda_down);
                accepted = true;
                step_size = max_abs(step);
            } else {
                lambda *= opts.lambda_up;
                if (lambda > 1e12) {
                    accepted = true; // no usable descent direction left
                    step_size = 0.0;
                }
            }
        }
        if (step_size < opts.step_tol)
            break;
    }

    result.x = std::move(x);
    result.residuals = std::move(r);
    result.max_abs_residual = max_abs(result.residuals);
    result.iterations = iter;
    result.converged = result.max_abs_residual < opts.residual_tol;
    return result;
}

std::vector<double> calibration_knot_times(const CalibrationProblem& problem) {
    if (problem.quotes.empty())
        throw std::invalid_argument("calibration: at least one quote required");
    std::vector<double> times;
    times.reserve(problem.quotes.size());
    for (const Quote& q : problem.quotes)
        times.push_back(
            year_fraction(problem.valuation, instrument_knot_date(q.instrument)));
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] > 0.0))
            throw std::invalid_argument("calibration: instrument knot at or before valuation");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument(
                "calibration: quotes must be sorted by strictly increasing maturity");
    }
    return times;
}

ZeroCurve curve_from_parameters(const CalibrationProblem& problem,
                                std::span<const double> z_params) {
    if (problem.scheme == SlopeScheme::Lavery && !problem.enable_lavery)
        throw std::invalid_argument(
            "calibration: Lavery scheme must be enabled explicitly (LP per residual)");
    const auto times = calibration_knot_times(problem);
    if (z_params.size() != times.size())
        throw std::invalid_argument("calibration: one parameter per quote required");
    DateGrid grid(problem.valuation, times);
    return build_zero_curve(grid, {z_params.begin(), z_params.end()}, problem.scheme,
                            problem.lavery_samples_per_interval);
}

ForwardSplineCurve forward_curve_from_parameters(const CalibrationProblem& problem,
                                                 std::span<const double> z_params,
                                                 ForwardSplineKind kind) {
    const auto knot_times = calibration_knot_times(problem);
    if (z_params.size() != knot_times.size())
        throw std::invalid_argument("calibration: one parameter per quote required");
    std::vector<double> times;
    times.reserve(knot_times.size() + 1);
    times.push_back(0.0);
    times.insert(times.end(), knot_times.begin(), knot_times.end());
    std::vector<double> fd(knot_times.size());
    double z_prev = 0.0;
    for (std::size_t i = 0; i < fd.size(); ++i) {
        fd[i] = -(z_params[i] - z_prev) / (times[i + 1] - times[i]);
        z_prev = z_params[i];
    }
    DateGrid grid(problem.valuation, std::move(times));
    return kind == ForwardSplineKind::SmartQuadratic
               ? ForwardSplineCurve::smart_quadratic(std::move(grid), std::move(fd))
               : ForwardSplineCurve::area_preserving(std::move(grid), std::move(fd));
}

namespace {

template <DiscountingCurve C>
std::vector<double> residuals_on(const C& curve, const CalibrationProblem& problem) {
    std::vector<double> out;
    out.reserve(problem.quotes.size());
    for (std::size_t i = 0; i < problem.quotes.size(); ++i) {
        const Quote& q = problem.quotes[i];
        const double model = model_par_rate(curve, q.instrument);
        if (!std::isfinite(model))
            throw std::runtime_error("calibration: non-finite model value for quote " +
                                     std::to_string(i));
        out.push_back(model - q.par_rate);
    }
    return out;
}

} // namespace

std::vector<double> residuals(std::span<const double> z_params,
                              const CalibrationProblem& problem) {
    if (problem.forward_pricing)
        return residuals_on(
            forward_curve_from_parameters(problem, z_params, *problem.forward_pricing),
            problem);
    return residuals_on(curve_from_parameters(problem, z_params), problem);
}

CalibrationResult calibrate(const CalibrationProblem& problem) {
    const auto times = calibration_knot_times(problem);
    const double initial_rate = problem.quotes.front().par_rate;
    std::vector<double> x0(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        x0[i] = -initial_rate * times[i];

    const auto fn = [&problem](std::span<const double> z) {
        return residuals(z, problem);
    };
    LmResult lm = levenberg_marquardt(fn, std::move(x0), problem.lm);

    return CalibrationResult{curve_from_parameters(problem, lm.x),
                             std::move(lm.residuals), lm.iterations, lm.converged};
}

} // namespace ycurve
