#include "ycurve/equivalence.hpp"

#include <cmath>

#include "ycurve/forward_space.hpp"
#include "ycurve/interpolation.hpp"
#include "ycurve/tenor_forward.hpp"

namespace ycurve {

SyntheticCurve make_synthetic_curve(std::mt19937_64& rng,
                                    const SyntheticCurveSpec& spec) {
    const int knots = spec.min_knots +
                      static_cast<int>(uniform01(rng) *
                                       double(spec.max_knots - spec.min_knots + 1));
    std::vector<double> times(static_cast<std::size_t>(knots));
    times[0] = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i)
        times[i] = times[i - 1] + spec.min_spacing +
                   uniform01(rng) * (spec.max_spacing - spec.min_spacing);

    std::vector<double> fd(times.size() - 1);
    for (double& f : fd)
        f = spec.forward_min + uniform01(rng) * (spec.forward_max - spec.forward_min);

    std::vector<double> z(times.size());
    z[0] = 0.0;
    for (std::size_t i = 0; i < fd.size(); ++i)
        z[i + 1] = z[i] - fd[i] * (times[i + 1] - times[i]);

    return SyntheticCurve{DateGrid(make_date(2019, 11, 6), std::move(times)),
                          std::move(fd), std::move(z)};
}

namespace {

template <typename Eval>
double forward_deviation(const SyntheticCurve& curve, int samples,
                         const Eval& forward_eval, const PiecewiseCubic& pp) {
    const double lo = curve.grid.front();
    const double hi = curve.grid.back();
    double max_dev = 0.0;
    double scale = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double t = lo + (hi - lo) * double(k) / double(samples - 1);
        const double f = forward_eval(t);
        max_dev = std::max(max_dev, std::abs(f + pp.derivative(t)));
        scale = std::max(scale, std::abs(f));
    }
    return max_dev / std::max(scale, 1e-8);
}

} // namespace

double smart_quadratic_deviation(const SyntheticCurve& curve, int samples) {
    const auto fc = ForwardSplineCurve::smart_quadratic(curve.grid, curve.fd);
    const auto s = bessel_slopes(curve.grid, curve.z);
    const auto pp = hermite_coefficients(curve.grid, curve.z, s);
    return forward_deviation(
        curve, samples, [&fc](double t) { return smart_quadratic_eval(fc, t); }, pp);
}

double area_preserving_deviation(const SyntheticCurve& curve, int samples) {
    const auto fc = ForwardSplineCurve::area_preserving(curve.grid, curve.fd);
    const auto s = c2_natural_slopes(curve.grid, curve.z);
    const auto pp = hermite_coefficients(curve.grid, curve.z, s);
    return forward_deviation(
        curve, samples, [&fc](double t) { return area_preserving_eval(fc, t); }, pp);
}

double tenor_quadratic_reduction(const ZeroCurve& curve, double tenor) {
    const TenorForwardCurve fc = tenor_curve_from_zero_curve(curve, tenor);
    const auto& knots = fc.knots();
    const auto& coeffs = fc.spline().coefficients();
    const auto& times = curve.grid().times();

    double scale = 0.0;
    for (const auto& c : coeffs)
        scale = std::max(scale, std::abs(c[3]));
    if (scale == 0.0)
        return 0.0; // every interval already quadratic

    double worst = 0.0;
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        const double mid = 0.5 * (knots[j] + knots[j + 1]);
        // interior of some (t_i, t_{i+1} - tenor)?
        for (std::size_t i = 0; i + 1 < times.size(); ++i) {
            if (mid > times[i] && mid < times[i + 1] - tenor) {
                worst = std::max(worst, std::abs(coeffs[j][3]));
                break;
            }
        }
    }
    return worst / scale;
}

EquivalenceReport run_equivalence_scans(std::uint64_t seed, int curves,
                                        int samples_per_curve,
                                        const SyntheticCurveSpec& spec) {
    std::mt19937_64 rng(seed);
    EquivalenceReport report;
    report.curves = curves;
    report.samples_per_curve = samples_per_curve;
    for (int c = 0; c < curves; ++c) {
        const SyntheticCurve curve = make_synthetic_curve(rng, spec);
        report.smart_quadratic_max_dev =
            std::max(report.smart_quadratic_max_dev,
                     smart_quadratic_deviation(curve, samples_per_curve));
        report.area_preserving_max_dev =
            std::max(report.area_preserving_max_dev,
                     area_preserving_deviation(curve, samples_per_curve));
        const ZeroCurve zc =
            build_zero_curve(curve.grid, curve.z, SlopeScheme::C2Natural);
        report.tenor_cubic_coeff_max = std::max(
            report.tenor_cubic_coeff_max, tenor_quadratic_reduction(zc, 1.0 / 365.0));
    }
    return report;
}

} // namespace ycurve
