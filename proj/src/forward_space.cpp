#include "ycurve/forward_space.hpp"

#include <cmath>
#include <stdexcept>

#include "ycurve/interpolation.hpp"

namespace ycurve {

namespace {

void check_sizes(const DateGrid& grid, std::span<const double> fd, const char* who) {
    if (grid.size() < 2)
        throw std::invalid_argument(std::string(who) + ": need at least two knots");
    if (fd.size() != grid.intervals())
        throw std::invalid_argument(std::string(who) + ": one discrete forward per interval");
}

} // namespace

std::vector<double> hagan_node_forwards(const DateGrid& grid,
                                        std::span<const double> fd) {
    check_sizes(grid, fd, "hagan_node_forwards");
    const std::size_t n = fd.size();
    if (n == 1)
        return {fd[0], fd[0]};
    const auto& t = grid.times();
    std::vector<double> f(n + 1);
    for (std::size_t i = 1; i < n; ++i)
        f[i] = ((t[i] - t[i - 1]) * fd[i] + (t[i + 1] - t[i]) * fd[i - 1]) /
               (t[i + 1] - t[i - 1]);
    f[0] = fd[0] - 0.5 * (f[1] - fd[0]);
    f[n] = fd[n - 1] - 0.5 * (f[n - 1] - fd[n - 1]);
    return f;
}

std::vector<double> area_preserving_node_forwards(const DateGrid& grid,
                                                  std::span<const double> fd) {
    check_sizes(grid, fd, "area_preserving_node_forwards");
    // Matching first derivatives across interior knots with f'(t_0) =
    // f'(t_n) = 0 gives exactly the natural C^2 node system with the
    // discrete forwards as interval means.
    return tridiagonal_solve(natural_c2_system(grid, fd));
}

ForwardSplineCurve::ForwardSplineCurve(DateGrid grid, std::vector<double> fd,
                                       std::vector<double> f, ForwardSplineKind kind)
    : grid_(std::move(grid)), fd_(std::move(fd)), f_(std::move(f)), kind_(kind) {
    cumulative_z_.resize(grid_.size());
    cumulative_z_[0] = 0.0;
    const auto& t = grid_.times();
    for (std::size_t i = 0; i < fd_.size(); ++i)
        cumulative_z_[i + 1] = cumulative_z_[i] - fd_[i] * (t[i + 1] - t[i]);
}

ForwardSplineCurve ForwardSplineCurve::smart_quadratic(DateGrid grid,
                                                       std::vector<double> fd) {
    auto f = hagan_node_forwards(grid, fd);
    return ForwardSplineCurve(std::move(grid), std::move(fd), std::move(f),
                              ForwardSplineKind::SmartQuadratic);
}

ForwardSplineCurve ForwardSplineCurve::area_preserving(DateGrid grid,
                                                       std::vector<double> fd) {
    auto f = area_preserving_node_forwards(grid, fd);
    return ForwardSplineCurve(std::move(grid), std::move(fd), std::move(f),
                              ForwardSplineKind::AreaPreserving);
}

double ForwardSplineCurve::forward(double t) const {
    return kind_ == ForwardSplineKind::SmartQuadratic ? smart_quadratic_eval(*this, t)
                                                      : area_preserving_eval(*this, t);
}

double ForwardSplineCurve::log_discount(double t) const {
    const auto& knots = grid_.times();
    if (t <= knots.front())
        return -f_.front() * (t - knots.front());
    if (t >= knots.back())
        return cumulative_z_.back() - f_.back() * (t - knots.back());

    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    const double h = knots[i + 1] - knots[i];
    const double x = (t - knots[i]) / h;
    double integral; // of f over [t_i, t], divided by h
    if (kind_ == ForwardSplineKind::SmartQuadratic) {
        const double g0 = f_[i] - fd_[i];
        const double g1 = f_[i + 1] - fd_[i];
        integral = fd_[i] * x + g0 * (x - 2.0 * x * x + x * x * x) +
                   g1 * (x * x * x - x * x);
    } else {
        const double bump = f_[i] + f_[i + 1] - 2.0 * fd_[i];
        integral = f_[i] * (x - 0.5 * x * x) + f_[i + 1] * 0.5 * x * x -
                   3.0 * bump * (0.5 * x * x - x * x * x / 3.0);
    }
    return cumulative_z_[i] - h * integral;
}

double ForwardSplineCurve::discount(double t) const {
    if (t < 0.0)
        throw std::invalid_argument("ForwardSplineCurve: negative time");
    return std::exp(log_discount(t));
}

namespace {

// Clamped interval index and relative position; flat beyond the ends.
struct Position {
    std::size_t i;
    double x;
};

Position locate(const ForwardSplineCurve& curve, double t) {
    const auto& knots = curve.grid().times();
    if (t <= knots.front())
        return {0, 0.0};
    if (t >= knots.back())
        return {knots.size() - 2, 1.0};
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    return {i, (t - knots[i]) / (knots[i + 1] - knots[i])};
}

} // namespace

double smart_quadratic_eval(const ForwardSplineCurve& curve, double t) {
    if (curve.kind() != ForwardSplineKind::SmartQuadratic)
        throw std::invalid_argument("smart_quadratic_eval: wrong curve kind");
    const auto [i, x] = locate(curve, t);
    const double fd = curve.discrete_forwards()[i];
    const double g0 = curve.node_forwards()[i] - fd;
    const double g1 = curve.node_forwards()[i + 1] - fd;
    return g0 * (1.0 - 4.0 * x + 3.0 * x * x) + g1 * (-2.0 * x + 3.0 * x * x) + fd;
}

double area_preserving_eval(const ForwardSplineCurve& curve, double t) {
    if (curve.kind() != ForwardSplineKind::AreaPreserving)
        throw std::invalid_argument("area_preserving_eval: wrong curve kind");
    const auto [i, x] = locate(curve, t);
    const double fl = curve.node_forwards()[i];
    const double fr = curve.node_forwards()[i + 1];
    const double fd = curve.discrete_forwards()[i];
    // The bump coefficient is -3 (f_{i-1} + f_i - 2 f_i^d); the sign of the
    // f_i^d term is forced by the interval-mean requirement (a constant
    // input must reproduce a constant forward).
    return fl * (1.0 - x) + fr * x - 3.0 * (fl + fr - 2.0 * fd) * x * (1.0 - x);
}

} // namespace ycurve
