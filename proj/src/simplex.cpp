#include "ycurve/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ycurve {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kCostTol = 1e-11;

struct Tableau {
    std::size_t m = 0;    // rows
    std::size_t n = 0;    // structural + slack columns (artificials follow)
    std::size_t cols = 0; // n + m artificials
    std::vector<double> a; // m x cols, row major
    std::vector<double> b; // m, all >= 0
    std::vector<double> cost;  // cols, current objective row (reduced costs)
    double cost_rhs = 0.0;
    std::vector<std::size_t> basis; // column basic in each row

    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double piv = at(pr, pc);
        const double inv = 1.0 / piv;
        for (std::size_t j = 0; j < cols; ++j)
            at(pr, j) *= inv;
        b[pr] *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == pr)
                continue;
            const double factor = at(r, pc);
            if (factor == 0.0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                at(r, j) -= factor * at(pr, j);
            at(r, pc) = 0.0;
            b[r] -= factor * b[pr];
            if (b[r] < 0.0 && b[r] > -1e-13)
                b[r] = 0.0;
        }
        const double cf = cost[pc];
        if (cf != 0.0) {
            for (std::size_t j = 0; j < cols; ++j)
                cost[j] -= cf * at(pr, j);
            cost[pc] = 0.0;
            cost_rhs -= cf * b[pr];
        }
        basis[pr] = pc;
    }
};

// Rebuilds the reduced-cost row from the original costs and the current
// basis; long pivot sequences drift the incrementally updated row.
void recompute_cost(Tableau& tab, const std::vector<double>& original_cost) {
    tab.cost = original_cost;
    tab.cost_rhs = 0.0;
    for (std::size_t r = 0; r < tab.m; ++r) {
        const double cb = original_cost[tab.basis[r]];
        if (cb == 0.0)
            continue;
        for (std::size_t j = 0; j < tab.cols; ++j)
            tab.cost[j] -= cb * tab.at(r, j);
        tab.cost_rhs -= cb * tab.b[r];
    }
    for (std::size_t r = 0; r < tab.m; ++r)
        tab.cost[tab.basis[r]] = 0.0;
}

// Returns true when optimal, false when unbounded.  `allowed` masks columns
// eligible to enter (artificials are excluded in phase 2).  Dantzig pricing
// normally; Bland's rule while the objective stalls, which breaks cycles.
bool run_phase(Tableau& tab, const std::vector<double>& original_cost,
               const std::vector<bool>& allowed, int& iterations,
               int max_iterations) {
    recompute_cost(tab, original_cost);
    int stall = 0;
    int since_refresh = 0;
    int local_iterations = 0;
    bool bland = false;
    bool rescued = false;
    double last_obj = tab.cost_rhs;
    while (true) {
        // entering column
        std::size_t pc = tab.cols;
        if (!bland) {
            double best = -kCostTol;
            for (std::size_t j = 0; j < tab.cols; ++j)
                if (allowed[j] && tab.cost[j] < best) {
                    best = tab.cost[j];
                    pc = j;
                }
        } else {
            for (std::size_t j = 0; j < tab.cols; ++j)
                if (allowed[j] && tab.cost[j] < -kCostTol) {
                    pc = j;
                    break;
                }
        }
        if (pc == tab.cols) {
            if (since_refresh == 0)
                return true;
            // rule out drift before declaring optimality
            recompute_cost(tab, original_cost);
            since_refresh = 0;
            bool clean = true;
            for (std::size_t j = 0; j < tab.cols && clean; ++j)
                clean = !(allowed[j] && tab.cost[j] < -kCostTol);
            if (clean)
                return true;
            continue;
        }

        // leaving row.  Two passes: tightest ratio first, then the row
        // with the largest pivot element among near-ties; small pivots
        // are what grinds a long dense pivot sequence into noise.  In
        // Bland mode the lowest basis index wins instead (anti-cycling).
        std::size_t pr = tab.m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < tab.m; ++r) {
            const double arc = tab.at(r, pc);
            if (arc > kPivotTol)
                best_ratio = std::min(best_ratio, tab.b[r] / arc);
        }
        if (best_ratio < std::numeric_limits<double>::infinity()) {
            // Bland mode needs exact ties or its termination argument breaks
            const double bound =
                bland ? best_ratio + 1e-12 * (1.0 + std::abs(best_ratio))
                      : best_ratio + 1e-9 * (1.0 + std::abs(best_ratio));
            double best_pivot = 0.0;
            for (std::size_t r = 0; r < tab.m; ++r) {
                const double arc = tab.at(r, pc);
                if (arc <= kPivotTol || tab.b[r] / arc > bound)
                    continue;
                const bool better =
                    bland ? (pr == tab.m || tab.basis[r] < tab.basis[pr])
                          : (arc > best_pivot);
                if (better) {
                    best_pivot = arc;
                    pr = r;
                }
            }
        }
        if (pr == tab.m) {
            // a numerically null column with noise-level reduced cost is
            // drift, not a descent ray
            double col_max = 0.0;
            for (std::size_t r = 0; r < tab.m; ++r)
                col_max = std::max(col_max, std::abs(tab.at(r, pc)));
            if (col_max <= kPivotTol && tab.cost[pc] > -1e-7) {
                tab.cost[pc] = 0.0;
                continue;
            }
            return false; // unbounded
        }

        tab.pivot(pr, pc);
        if (++iterations > max_iterations)
            throw std::runtime_error("simplex_solve: iteration limit exceeded");
        if (++since_refresh >= 256) {
            recompute_cost(tab, original_cost);
            since_refresh = 0;
        }
        if (++local_iterations == 30000 && !rescued) {
            // pathological degeneracy: break the ties with a graded
            // right-hand-side perturbation, far below the 1e-9 budget
            rescued = true;
            for (std::size_t r = 0; r < tab.m; ++r)
                tab.b[r] += 1e-10 * (1.0 + std::abs(tab.b[r])) * double(r + 1) /
                            double(tab.m);
            recompute_cost(tab, original_cost);
            since_refresh = 0;
        }

        if (!bland) {
            if (tab.cost_rhs < last_obj - 1e-12) {
                stall = 0;
                last_obj = tab.cost_rhs;
            } else if (++stall > 2 * static_cast<int>(tab.m + tab.cols)) {
                bland = true; // anti-cycling from here on
            }
        }
    }
}

} // namespace

SimplexResult simplex_solve(const LinearProgram& lp) {
    const std::size_t nv = lp.num_vars;
    if (lp.objective.size() != nv)
        throw std::invalid_argument("simplex_solve: objective size mismatch");
    if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != nv)
        throw std::invalid_argument("simplex_solve: lower_bounds size mismatch");
    for (const auto& row : lp.rows)
        if (row.coeffs.size() != nv)
            throw std::invalid_argument("simplex_solve: row size mismatch");
    for (double c : lp.objective)
        if (!std::isfinite(c))
            throw std::invalid_argument("simplex_solve: non-finite objective");
    for (const auto& row : lp.rows) {
        if (!std::isfinite(row.rhs))
            throw std::invalid_argument("simplex_solve: non-finite rhs");
        for (double c : row.coeffs)
            if (!std::isfinite(c))
                throw std::invalid_argument("simplex_solve: non-finite coefficient");
    }

    const std::size_t m = lp.rows.size();

    // Equilibrate: rows to unit max-norm, then columns.  Ill-scaled inputs
    // (the L1-spline programs at extreme candidate points) otherwise force
    // long sequences of tiny pivots.
    LinearProgram scaled = lp;
    std::vector<double> col_scale(nv, 1.0);
    for (auto& row : scaled.rows) {
        double rmax = 0.0;
        for (double c : row.coeffs)
            rmax = std::max(rmax, std::abs(c));
        if (rmax > 0.0) {
            for (double& c : row.coeffs)
                c /= rmax;
            row.rhs /= rmax;
        }
    }
    for (std::size_t j = 0; j < nv; ++j) {
        double cmax = 0.0;
        for (const auto& row : scaled.rows)
            cmax = std::max(cmax, std::abs(row.coeffs[j]));
        if (cmax > 0.0) {
            col_scale[j] = cmax;
            for (auto& row : scaled.rows)
                row.coeffs[j] /= cmax;
            scaled.objective[j] /= cmax;
            if (!scaled.lower_bounds.empty() && scaled.lower_bounds[j].has_value())
                scaled.lower_bounds[j] = *scaled.lower_bounds[j] * cmax;
        }
    }

    // Column layout: for variable j either one shifted column (lower bound)
    // or a positive/negative pair (free), then one slack/surplus per
    // inequality row, then one artificial per row.
    std::vector<std::size_t> pos_col(nv), neg_col(nv, SIZE_MAX);
    std::vector<double> shift(nv, 0.0);
    std::size_t n = 0;
    for (std::size_t j = 0; j < nv; ++j) {
        pos_col[j] = n++;
        if (scaled.lower_bounds.empty() || !scaled.lower_bounds[j].has_value())
            neg_col[j] = n++;
        else
            shift[j] = *scaled.lower_bounds[j];
    }
    std::vector<std::size_t> slack_col(m, SIZE_MAX);
    for (std::size_t r = 0; r < m; ++r)
        if (scaled.rows[r].relation != Relation::Equal)
            slack_col[r] = n++;

    Tableau tab;
    tab.m = m;
    tab.n = n;
    tab.cols = n + m;
    tab.a.assign(m * tab.cols, 0.0);
    tab.b.assign(m, 0.0);
    tab.basis.resize(m);

    for (std::size_t r = 0; r < m; ++r) {
        const auto& row = scaled.rows[r];
        double rhs = row.rhs;
        for (std::size_t j = 0; j < nv; ++j)
            rhs -= row.coeffs[j] * shift[j];
        const double sign = rhs < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < nv; ++j) {
            const double c = sign * row.coeffs[j];
            tab.at(r, pos_col[j]) = c;
            if (neg_col[j] != SIZE_MAX)
                tab.at(r, neg_col[j]) = -c;
        }
        if (slack_col[r] != SIZE_MAX) {
            const double s = row.relation == Relation::LessEq ? 1.0 : -1.0;
            tab.at(r, slack_col[r]) = sign * s;
        }
        tab.b[r] = sign * rhs;
        tab.at(r, n + r) = 1.0; // artificial
        tab.basis[r] = n + r;
    }

    const int max_iterations = 200000;
    int iterations = 0;
    std::vector<bool> allowed(tab.cols, true);

    // Phase 1: minimise the sum of artificials.
    std::vector<double> phase1_cost(tab.cols, 0.0);
    for (std::size_t j = tab.n; j < tab.cols; ++j)
        phase1_cost[j] = 1.0;
    run_phase(tab, phase1_cost, allowed, iterations,
              max_iterations); // cannot be unbounded

    double scale = 1.0;
    for (std::size_t r = 0; r < m; ++r)
        scale = std::max(scale, std::abs(scaled.rows[r].rhs));
    if (-tab.cost_rhs > 1e-8 * scale) {
        SimplexResult res;
        res.status = SimplexStatus::Infeasible;
        res.iterations = iterations;
        return res;
    }

    // Drive any artificial still basic (at zero level) out of the basis.
    for (std::size_t r = 0; r < m; ++r) {
        if (tab.basis[r] < tab.n)
            continue;
        std::size_t pc = tab.cols;
        for (std::size_t j = 0; j < tab.n; ++j)
            if (std::abs(tab.at(r, j)) > 1e-9) {
                pc = j;
                break;
            }
        if (pc != tab.cols)
            tab.pivot(r, pc);
        // otherwise the row is redundant; the artificial stays basic at zero
    }
    for (std::size_t j = tab.n; j < tab.cols; ++j)
        allowed[j] = false;

    // Phase 2: the (scaled) objective.
    std::vector<double> phase2_cost(tab.cols, 0.0);
    for (std::size_t j = 0; j < nv; ++j) {
        phase2_cost[pos_col[j]] = scaled.objective[j];
        if (neg_col[j] != SIZE_MAX)
            phase2_cost[neg_col[j]] = -scaled.objective[j];
    }

    if (!run_phase(tab, phase2_cost, allowed, iterations, max_iterations)) {
        SimplexResult res;
        res.status = SimplexStatus::Unbounded;
        res.iterations = iterations;
        return res;
    }

    SimplexResult res;
    res.status = SimplexStatus::Optimal;
    res.iterations = iterations;
    res.x.assign(nv, 0.0);
    std::vector<double> col_value(tab.cols, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        col_value[tab.basis[r]] = tab.b[r];
    for (std::size_t j = 0; j < nv; ++j) {
        double v = col_value[pos_col[j]];
        if (neg_col[j] != SIZE_MAX)
            v -= col_value[neg_col[j]];
        res.x[j] = (shift[j] + v) / col_scale[j]; // undo the column scaling
    }
    res.objective = 0.0;
    for (std::size_t j = 0; j < nv; ++j)
        res.objective += lp.objective[j] * res.x[j];

    double violation = 0.0;
    for (const auto& row : lp.rows) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < nv; ++j)
            lhs += row.coeffs[j] * res.x[j];
        double v = 0.0;
        switch (row.relation) {
        case Relation::LessEq: v = lhs - row.rhs; break;
        case Relation::GreaterEq: v = row.rhs - lhs; break;
        case Relation::Equal: v = std::abs(lhs - row.rhs); break;
        }
        violation = std::max(violation, v);
    }
    res.feasibility_residual = violation;
    return res;
}

} // namespace ycurve
