#include "ycurve/tenor_forward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ycurve/interpolation.hpp"

namespace ycurve {

namespace {

constexpr double kKnotTol = 1e-12; // years; coincident-knot tolerance

std::vector<double> sorted_dedupe(std::vector<double> points) {
    std::sort(points.begin(), points.end());
    std::vector<double> out;
    out.reserve(points.size());
    for (double p : points)
        if (out.empty() || p - out.back() > kKnotTol)
            out.push_back(p);
    return out;
}

using Poly = PiecewiseCubic::Coeffs;

// Coefficients of p(u) = poly(u + delta) in the power basis.
Poly shift_poly(const Poly& c, double delta) {
    return {c[0] + delta * (c[1] + delta * (c[2] + delta * c[3])),
            c[1] + delta * (2.0 * c[2] + 3.0 * c[3] * delta),
            c[2] + 3.0 * c[3] * delta,
            c[3]};
}

// Polynomial governing pp at locate_at (interior piece or the linear
// extension), expanded about expand_at.
Poly piece_about(const PiecewiseCubic& pp, double locate_at, double expand_at) {
    const auto& knots = pp.knots();
    if (locate_at < knots.front()) {
        const Poly line{pp(knots.front()), pp.derivative(knots.front()), 0.0, 0.0};
        return shift_poly(line, expand_at - knots.front());
    }
    if (locate_at >= knots.back()) {
        const Poly line{pp(knots.back()), pp.derivative(knots.back()), 0.0, 0.0};
        return shift_poly(line, expand_at - knots.back());
    }
    const std::size_t i = pp.locate(locate_at);
    return shift_poly(pp.coefficients()[i], expand_at - knots[i]);
}

} // namespace

DateGrid augment_knots(const DateGrid& grid, double tenor) {
    if (!(tenor > 0.0))
        throw std::invalid_argument("augment_knots: tenor must be positive");
    std::vector<double> points;
    points.reserve(2 * grid.size());
    for (double t : grid.times()) {
        points.push_back(t);
        points.push_back(t + tenor);
    }
    return DateGrid(grid.valuation(), sorted_dedupe(std::move(points)));
}

TenorForwardCurve::TenorForwardCurve(Date valuation, double tenor, PiecewiseCubic pp)
    : valuation_(valuation), tenor_(tenor), pp_(std::move(pp)) {
    if (!(tenor_ > 0.0))
        throw std::invalid_argument("TenorForwardCurve: tenor must be positive");
}

TenorForwardCurve TenorForwardCurve::from_forwards(Date valuation,
                                                   std::vector<double> knots,
                                                   const std::vector<double>& forwards,
                                                   double tenor) {
    DateGrid grid(valuation, std::move(knots));
    const auto slopes = c2_natural_slopes(grid, forwards);
    return TenorForwardCurve(valuation, tenor,
                             hermite_coefficients(grid, forwards, slopes));
}

TenorForwardCurve tenor_curve_from_zero_curve(const ZeroCurve& curve, double tenor) {
    if (!(tenor > 0.0))
        throw std::invalid_argument("tenor_curve_from_zero_curve: tenor must be positive");
    const auto& times = curve.grid().times();
    const double lo = times.front();
    const double hi = times.back() + tenor;

    // Breakpoints of fbar: source knots seen by either argument (t_i and
    // t_i - tenor) plus the t_i + tenor image points of the augmented set.
    std::vector<double> points;
    points.reserve(3 * times.size());
    for (double t : times) {
        points.push_back(t);
        points.push_back(t + tenor);
        if (t - tenor > lo + kKnotTol)
            points.push_back(t - tenor);
    }
    std::vector<double> knots;
    for (double p : sorted_dedupe(std::move(points)))
        if (p >= lo - kKnotTol && p <= hi + kKnotTol)
            knots.push_back(p);

    const PiecewiseCubic& pp = curve.spline();
    std::vector<PiecewiseCubic::Coeffs> coeffs(knots.size() - 1);
    for (std::size_t j = 0; j + 1 < knots.size(); ++j) {
        const double mid = 0.5 * (knots[j] + knots[j + 1]);
        const Poly near = piece_about(pp, mid, knots[j]);
        const Poly far = piece_about(pp, mid + tenor, knots[j] + tenor);
        for (std::size_t k = 0; k < 4; ++k)
            coeffs[j][k] = (near[k] - far[k]) / tenor;
    }
    return TenorForwardCurve(curve.valuation(), tenor,
                             PiecewiseCubic(std::move(knots), std::move(coeffs)));
}

RecoveredLogDiscount::RecoveredLogDiscount(TenorForwardCurve curve,
                                           TenorExtrapolation)
    : curve_(std::move(curve)), stub_rate_(curve_.value(curve_.knots().front())) {}

double RecoveredLogDiscount::log_discount(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("RecoveredLogDiscount: negative time");
    const double tenor = curve_.tenor();
    const double first = curve_.knots().front();
    const long long steps = static_cast<long long>(std::floor(t / tenor));
    const double stub = t - static_cast<double>(steps) * tenor;

    // Kahan summation: the lattice can contain tens of thousands of points.
    double sum = 0.0, carry = 0.0;
    for (long long k = 1; k <= steps; ++k) {
        const double u = t - static_cast<double>(k) * tenor;
        const double term = u <= first ? stub_rate_ : curve_.value(u);
        const double y = term - carry;
        const double s = sum + y;
        carry = (s - sum) - y;
        sum = s;
    }
    return -stub * stub_rate_ - tenor * sum;
}

double RecoveredLogDiscount::discount(double t) const {
    return std::exp(log_discount(t));
}

RecoveredLogDiscount zero_curve_from_tenor_curve(const TenorForwardCurve& curve,
                                                 TenorExtrapolation extrapolation) {
    return RecoveredLogDiscount(curve, extrapolation);
}

} // namespace ycurve
