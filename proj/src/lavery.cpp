#include "ycurve/lavery.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ycurve/simplex.hpp"

namespace ycurve {

namespace {

// p'' at relative position theta of interval i is linear in the slopes:
//   p'' = a s_i + b s_{i+1} + g,
//   a = (6 theta - 4)/h,  b = (6 theta - 2)/h,  g = (6 - 12 theta) d_i / h.
struct SecondDerivTerm {
    double a, b, g;
};

SecondDerivTerm second_deriv_term(double theta, double h, double d) {
    return {(6.0 * theta - 4.0) / h, (6.0 * theta - 2.0) / h,
            (6.0 - 12.0 * theta) * d / h};
}

void check_spec(const LaverySpec& spec) {
    if (spec.samples_per_interval < 2)
        throw std::invalid_argument("LaverySpec: samples_per_interval must be >= 2");
}

} // namespace

SlopeVector lavery_slopes(const DateGrid& grid, std::span<const double> values,
                          const LaverySpec& spec) {
    check_spec(spec);
    if (values.size() != grid.size())
        throw std::invalid_argument("lavery_slopes: size mismatch");
    if (grid.size() < 2)
        throw std::invalid_argument("lavery_slopes: need at least two knots");

    const auto& t = grid.times();
    const auto d = divided_differences(grid, values);
    const std::size_t n = d.size();
    const std::size_t M = static_cast<std::size_t>(spec.samples_per_interval);
    const std::size_t num_slopes = n + 1;
    const std::size_t num_epi = n * M;

    LinearProgram lp;
    lp.num_vars = num_slopes + num_epi;
    lp.objective.assign(lp.num_vars, 0.0);
    lp.lower_bounds.assign(lp.num_vars, std::nullopt);
    for (std::size_t k = 0; k < num_epi; ++k)
        lp.lower_bounds[num_slopes + k] = 0.0;

    lp.rows.reserve(2 * num_epi);
    for (std::size_t i = 0; i < n; ++i) {
        const double h = t[i + 1] - t[i];
        for (std::size_t k = 0; k < M; ++k) {
            const double theta = double(k) / double(M - 1);
            double w = h / double(M - 1);
            if (k == 0 || k == M - 1)
                w *= 0.5;
            const std::size_t e = num_slopes + i * M + k;
            lp.objective[e] = w;

            const auto term = second_deriv_term(theta, h, d[i]);
            LinearProgram::Row above; // e - p'' >= 0
            above.coeffs.assign(lp.num_vars, 0.0);
            above.coeffs[i] = -term.a;
            above.coeffs[i + 1] = -term.b;
            above.coeffs[e] = 1.0;
            above.relation = Relation::GreaterEq;
            above.rhs = term.g;
            lp.rows.push_back(std::move(above));

            LinearProgram::Row below; // e + p'' >= 0
            below.coeffs.assign(lp.num_vars, 0.0);
            below.coeffs[i] = term.a;
            below.coeffs[i + 1] = term.b;
            below.coeffs[e] = 1.0;
            below.relation = Relation::GreaterEq;
            below.rhs = -term.g;
            lp.rows.push_back(std::move(below));
        }
    }

    // natural boundary rows: 2 s_0 + s_1 = 3 d_0 and s_{n-1} + 2 s_n = 3 d_{n-1}
    {
        LinearProgram::Row left;
        left.coeffs.assign(lp.num_vars, 0.0);
        left.coeffs[0] = 2.0;
        left.coeffs[1] = 1.0;
        left.relation = Relation::Equal;
        left.rhs = 3.0 * d.front();
        lp.rows.push_back(std::move(left));

        LinearProgram::Row right;
        right.coeffs.assign(lp.num_vars, 0.0);
        right.coeffs[n - 1] = 1.0;
        right.coeffs[n] = 2.0;
        right.relation = Relation::Equal;
        right.rhs = 3.0 * d.back();
        lp.rows.push_back(std::move(right));
    }

    const SimplexResult sol = simplex_solve(lp);
    if (sol.status != SimplexStatus::Optimal)
        throw std::runtime_error(
            "lavery_slopes: LP solve failed (" +
            std::string(sol.status == SimplexStatus::Infeasible ? "infeasible"
                                                                : "unbounded") +
            " after " + std::to_string(sol.iterations) + " iterations)");

    if (sol.feasibility_residual > 1e-9)
        throw std::runtime_error(
            "lavery_slopes: LP solution violates constraints (residual " +
            std::to_string(sol.feasibility_residual) + ", iterations " +
            std::to_string(sol.iterations) + ")");

    SlopeVector s(sol.x.begin(), sol.x.begin() + num_slopes);
    const double check = lavery_objective(grid, values, s, spec);
    if (std::abs(check - sol.objective) > 1e-8 * (1.0 + std::abs(check)))
        throw std::runtime_error(
            "lavery_slopes: LP objective inconsistent with returned slopes (lp=" +
            std::to_string(sol.objective) + ", direct=" + std::to_string(check) +
            ", iterations=" + std::to_string(sol.iterations) + ")");
    return s;
}

double lavery_objective(const DateGrid& grid, std::span<const double> values,
                        std::span<const double> slopes, const LaverySpec& spec) {
    check_spec(spec);
    if (values.size() != grid.size() || slopes.size() != grid.size())
        throw std::invalid_argument("lavery_objective: size mismatch");
    const auto& t = grid.times();
    const auto d = divided_differences(grid, values);
    const std::size_t M = static_cast<std::size_t>(spec.samples_per_interval);
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double h = t[i + 1] - t[i];
        for (std::size_t k = 0; k < M; ++k) {
            const double theta = double(k) / double(M - 1);
            double w = h / double(M - 1);
            if (k == 0 || k == M - 1)
                w *= 0.5;
            const auto term = second_deriv_term(theta, h, d[i]);
            total += w * std::abs(term.a * slopes[i] + term.b * slopes[i + 1] + term.g);
        }
    }
    return total;
}

} // namespace ycurve
