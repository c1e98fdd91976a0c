#include "ycurve/interpolation.hpp"

#include <cmath>
#include <stdexcept>

#include "ycurve/lavery.hpp"

namespace ycurve {

std::vector<double> tridiagonal_solve(const TridiagonalSystem& sys) {
    const std::size_t n = sys.diag.size();
    if (sys.sub.size() != n || sys.super.size() != n || sys.rhs.size() != n)
        throw std::invalid_argument("tridiagonal_solve: inconsistent band lengths");
    std::vector<double> diag = sys.diag;
    std::vector<double> x = sys.rhs;
    for (std::size_t i = 1; i < n; ++i) {
        if (diag[i - 1] == 0.0)
            throw std::runtime_error("tridiagonal_solve: zero pivot");
        const double m = sys.sub[i] / diag[i - 1];
        diag[i] -= m * sys.super[i - 1];
        x[i] -= m * x[i - 1];
    }
    if (diag[n - 1] == 0.0)
        throw std::runtime_error("tridiagonal_solve: zero pivot");
    x[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        x[i] = (x[i] - sys.super[i] * x[i + 1]) / diag[i];
    return x;
}

std::vector<double> divided_differences(const DateGrid& grid,
                                        std::span<const double> values) {
    if (values.size() != grid.size())
        throw std::invalid_argument("divided_differences: size mismatch");
    const auto& t = grid.times();
    std::vector<double> d(grid.intervals());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = (values[i + 1] - values[i]) / (t[i + 1] - t[i]);
    return d;
}

PiecewiseCubic hermite_coefficients(const DateGrid& grid,
                                    std::span<const double> values,
                                    std::span<const double> slopes) {
    if (values.size() != grid.size() || slopes.size() != grid.size())
        throw std::invalid_argument("hermite_coefficients: size mismatch");
    const auto& t = grid.times();
    std::vector<PiecewiseCubic::Coeffs> coeffs(grid.intervals());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double h = t[i + 1] - t[i];
        const double d = (values[i + 1] - values[i]) / h;
        coeffs[i] = {values[i], slopes[i],
                     (3.0 * d - slopes[i + 1] - 2.0 * slopes[i]) / h,
                     -(2.0 * d - slopes[i + 1] - slopes[i]) / (h * h)};
    }
    return PiecewiseCubic(t, std::move(coeffs));
}

namespace {

// Natural end conditions expressed on node forwards:
// f_0 = f_1^d - (f_1 - f_1^d)/2 and f_n = f_n^d - (f_{n-1} - f_n^d)/2.
void apply_natural_ends(std::span<const double> fd, std::vector<double>& f) {
    const std::size_t n = fd.size();
    f[0] = fd[0] - 0.5 * (f[1] - fd[0]);
    f[n] = fd[n - 1] - 0.5 * (f[n - 1] - fd[n - 1]);
}

// Shared scaffold for the forward-space limiter schemes: interior node
// forwards from the scheme's two-point rule on adjacent discrete forwards,
// natural end conditions, then s = -f.
template <typename Interior>
SlopeVector limiter_scheme_slopes(const DateGrid& grid,
                                  std::span<const double> values,
                                  Interior interior) {
    if (values.size() != grid.size())
        throw std::invalid_argument("slope scheme: size mismatch");
    if (grid.size() < 2)
        throw std::invalid_argument("slope scheme: need at least two knots");
    const auto d = divided_differences(grid, values);
    const std::size_t n = d.size();
    if (n == 1)
        return SlopeVector{d[0], d[0]};
    std::vector<double> fd(n);
    for (std::size_t i = 0; i < n; ++i)
        fd[i] = -d[i];
    const auto& t = grid.times();
    std::vector<double> f(n + 1, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        f[i] = interior(fd[i - 1], fd[i], t[i - 1], t[i], t[i + 1]);
    apply_natural_ends(fd, f);
    SlopeVector s(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        s[i] = -f[i];
    return s;
}

} // namespace

SlopeVector bessel_slopes(const DateGrid& grid, std::span<const double> values) {
    if (values.size() != grid.size())
        throw std::invalid_argument("bessel_slopes: size mismatch");
    if (grid.size() < 2)
        throw std::invalid_argument("bessel_slopes: need at least two knots");
    const auto d = divided_differences(grid, values);
    const std::size_t n = d.size();
    if (n == 1)
        return SlopeVector{d[0], d[0]};
    const auto& t = grid.times();
    SlopeVector s(n + 1);
    for (std::size_t i = 1; i < n; ++i)
        s[i] = ((t[i] - t[i - 1]) * d[i] + (t[i + 1] - t[i]) * d[i - 1]) /
               (t[i + 1] - t[i - 1]);
    s[0] = d[0] - 0.5 * (s[1] - d[0]);
    s[n] = d[n - 1] - 0.5 * (s[n - 1] - d[n - 1]);
    return s;
}

TridiagonalSystem natural_c2_system(const DateGrid& grid,
                                    std::span<const double> interval_means) {
    if (interval_means.size() != grid.intervals())
        throw std::invalid_argument("natural_c2_system: one mean per interval");
    const auto& t = grid.times();
    const std::size_t n = interval_means.size();
    TridiagonalSystem sys;
    sys.sub.assign(n + 1, 0.0);
    sys.diag.assign(n + 1, 0.0);
    sys.super.assign(n + 1, 0.0);
    sys.rhs.assign(n + 1, 0.0);

    sys.diag[0] = 2.0;
    sys.super[0] = 1.0;
    sys.rhs[0] = 3.0 * interval_means[0];
    for (std::size_t i = 1; i < n; ++i) {
        const double hl = t[i] - t[i - 1];
        const double hr = t[i + 1] - t[i];
        sys.sub[i] = 1.0 / hl;
        sys.diag[i] = 2.0 * (1.0 / hl + 1.0 / hr);
        sys.super[i] = 1.0 / hr;
        sys.rhs[i] = 3.0 * (interval_means[i - 1] / hl + interval_means[i] / hr);
    }
    sys.sub[n] = 1.0;
    sys.diag[n] = 2.0;
    sys.rhs[n] = 3.0 * interval_means[n - 1];
    return sys;
}

SlopeVector c2_natural_slopes(const DateGrid& grid, std::span<const double> values) {
    if (values.size() != grid.size())
        throw std::invalid_argument("c2_natural_slopes: size mismatch");
    if (grid.size() < 2)
        throw std::invalid_argument("c2_natural_slopes: need at least two knots");
    const auto d = divided_differences(grid, values);
    return tridiagonal_solve(natural_c2_system(grid, d));
}

SlopeVector harmonic_slopes(const DateGrid& grid, std::span<const double> values) {
    return limiter_scheme_slopes(
        grid, values,
        [](double a, double b, double tl, double tm, double tr) {
            if (a == b)
                return a;
            if (a == 0.0 || b == 0.0 || a * b < 0.0)
                return 0.0;
            const double hl = tm - tl;
            const double hr = tr - tm;
            // 1/f = (hl + 2 hr)/(3 (tr - tl)) / a + (2 hl + hr)/(3 (tr - tl)) / b
            return 3.0 * (tr - tl) * a * b /
                   ((hl + 2.0 * hr) * b + (2.0 * hl + hr) * a);
        });
}

SlopeVector rational_limiter_slopes(const DateGrid& grid,
                                    std::span<const double> values) {
    return limiter_scheme_slopes(
        grid, values,
        [](double a, double b, double, double, double) {
            if (a == b)
                return a;
            if (a * b <= 0.0)
                return 0.0; // denominator may vanish for opposite signs
            return 3.0 * b * a * (b + a) / (b * b + 4.0 * b * a + a * a);
        });
}

SlopeVector van_albada_slopes(const DateGrid& grid, std::span<const double> values) {
    return limiter_scheme_slopes(
        grid, values,
        [](double a, double b, double, double, double) {
            if (a == b)
                return a;
            return (b * b * a + b * (a * a)) / (b * b + a * a);
        });
}

ZeroCurve build_zero_curve(const DateGrid& grid, std::vector<double> z,
                           SlopeScheme scheme, int lavery_samples_per_interval) {
    if (z.size() != grid.size())
        throw std::invalid_argument("build_zero_curve: one z value per knot");

    DateGrid full = grid;
    if (grid.front() > 0.0) {
        std::vector<double> times;
        times.reserve(grid.size() + 1);
        times.push_back(0.0);
        times.insert(times.end(), grid.times().begin(), grid.times().end());
        full = DateGrid(grid.valuation(), std::move(times));
        z.insert(z.begin(), 0.0);
    }

    SlopeVector s;
    switch (scheme) {
    case SlopeScheme::Bessel:
        s = bessel_slopes(full, z);
        break;
    case SlopeScheme::C2Natural:
        s = c2_natural_slopes(full, z);
        break;
    case SlopeScheme::Harmonic:
        s = harmonic_slopes(full, z);
        break;
    case SlopeScheme::RationalLimiter:
        s = rational_limiter_slopes(full, z);
        break;
    case SlopeScheme::VanAlbada:
        s = van_albada_slopes(full, z);
        break;
    case SlopeScheme::Lavery:
        s = lavery_slopes(full, z, LaverySpec{lavery_samples_per_interval});
        break;
    }
    PiecewiseCubic pp = hermite_coefficients(full, z, s);
    return ZeroCurve(std::move(full), std::move(z), std::move(pp), scheme);
}

} // namespace ycurve
