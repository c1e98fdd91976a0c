#include "ycurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ycurve {

namespace {

void validate_times(const std::vector<double>& times) {
    if (times.empty())
        throw std::invalid_argument("DateGrid: at least one knot required");
    if (!(times.front() >= 0.0))
        throw std::invalid_argument("DateGrid: first knot must be >= 0");
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]))
            throw std::invalid_argument("DateGrid: non-finite knot time");
        if (i > 0 && !(times[i] > times[i - 1]))
            throw std::invalid_argument("DateGrid: knot times must be strictly increasing");
    }
}

} // namespace

DateGrid::DateGrid(Date valuation, std::vector<double> times)
    : valuation_(valuation), times_(std::move(times)) {
    validate_times(times_);
}

DateGrid DateGrid::from_dates(Date valuation, const std::vector<Date>& dates) {
    std::vector<double> times;
    times.reserve(dates.size());
    for (Date d : dates)
        times.push_back(year_fraction(valuation, d));
    return DateGrid(valuation, std::move(times));
}

PiecewiseCubic::PiecewiseCubic(std::vector<double> knots, std::vector<Coeffs> coeffs)
    : knots_(std::move(knots)), coeffs_(std::move(coeffs)) {
    if (knots_.size() < 2)
        throw std::invalid_argument("PiecewiseCubic: need at least two knots");
    if (coeffs_.size() + 1 != knots_.size())
        throw std::invalid_argument("PiecewiseCubic: one coefficient quadruple per interval");
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (!(knots_[i] > knots_[i - 1]))
            throw std::invalid_argument("PiecewiseCubic: knots must be strictly increasing");
    const auto& c = coeffs_.back();
    const double h = knots_.back() - knots_[knots_.size() - 2];
    right_value_ = c[0] + h * (c[1] + h * (c[2] + h * c[3]));
    right_slope_ = c[1] + h * (2.0 * c[2] + h * 3.0 * c[3]);
}

std::size_t PiecewiseCubic::locate(double t) const {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    if (it == knots_.begin())
        return 0;
    std::size_t idx = static_cast<std::size_t>(it - knots_.begin()) - 1;
    return std::min(idx, coeffs_.size() - 1);
}

double PiecewiseCubic::operator()(double t) const {
    if (t < knots_.front()) {
        const auto& c = coeffs_.front();
        return c[0] + c[1] * (t - knots_.front());
    }
    if (t >= knots_.back())
        return right_value_ + right_slope_ * (t - knots_.back());
    const std::size_t i = locate(t);
    const double u = t - knots_[i];
    const auto& c = coeffs_[i];
    return c[0] + u * (c[1] + u * (c[2] + u * c[3]));
}

double PiecewiseCubic::derivative(double t) const {
    if (t < knots_.front())
        return coeffs_.front()[1];
    if (t >= knots_.back())
        return right_slope_;
    const std::size_t i = locate(t);
    const double u = t - knots_[i];
    const auto& c = coeffs_[i];
    return c[1] + u * (2.0 * c[2] + u * 3.0 * c[3]);
}

double PiecewiseCubic::second_derivative(double t) const {
    if (t < knots_.front() || t >= knots_.back())
        return 0.0;
    const std::size_t i = locate(t);
    const double u = t - knots_[i];
    const auto& c = coeffs_[i];
    return 2.0 * c[2] + 6.0 * c[3] * u;
}

double PiecewiseCubic::third_derivative(double t) const {
    if (t < knots_.front() || t >= knots_.back())
        return 0.0;
    return 6.0 * coeffs_[locate(t)][3];
}

const char* to_string(SlopeScheme scheme) {
    switch (scheme) {
    case SlopeScheme::Bessel: return "bessel";
    case SlopeScheme::C2Natural: return "c2";
    case SlopeScheme::Harmonic: return "harmonic";
    case SlopeScheme::RationalLimiter: return "rational";
    case SlopeScheme::VanAlbada: return "van-albada";
    case SlopeScheme::Lavery: return "lavery";
    }
    return "unknown";
}

ZeroCurve::ZeroCurve(DateGrid grid, std::vector<double> z, PiecewiseCubic pp,
                     SlopeScheme scheme)
    : grid_(std::move(grid)), z_(std::move(z)), pp_(std::move(pp)), scheme_(scheme) {
    if (z_.size() != grid_.size())
        throw std::invalid_argument("ZeroCurve: one z value per knot required");
    if (grid_.front() == 0.0 && z_.front() != 0.0)
        throw std::invalid_argument("ZeroCurve: z(0) must be 0");
}

double ZeroCurve::log_discount(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("ZeroCurve: negative time");
    return pp_(t);
}

double ZeroCurve::discount(double t) const {
    return std::exp(log_discount(t));
}

double ZeroCurve::zero_rate(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("ZeroCurve: negative time");
    if (t == 0.0)
        return instantaneous_forward(0.0);
    return -pp_(t) / t;
}

double ZeroCurve::instantaneous_forward(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("ZeroCurve: negative time");
    return -pp_.derivative(t);
}

double ZeroCurve::discrete_forward_cc(double u, double v) const {
    if (!(u < v))
        throw std::invalid_argument("discrete_forward_cc: requires u < v");
    if (u < 0.0)
        throw std::invalid_argument("discrete_forward_cc: negative time");
    return -(pp_(v) - pp_(u)) / (v - u);
}

double ZeroCurve::discrete_forward_simple(double u, double v, double accrual) const {
    if (!(u < v))
        throw std::invalid_argument("discrete_forward_simple: requires u < v");
    if (!(accrual > 0.0))
        throw std::invalid_argument("discrete_forward_simple: accrual must be positive");
    return (discount(u) / discount(v) - 1.0) / accrual;
}

CurveSample ZeroCurve::sample(double t) const {
    CurveSample s;
    s.t = t;
    s.discount = discount(t);
    s.zero = zero_rate(t);
    s.inst_forward = instantaneous_forward(t);
    s.second_deriv_forward = -pp_.third_derivative(t);
    return s;
}

} // namespace ycurve
