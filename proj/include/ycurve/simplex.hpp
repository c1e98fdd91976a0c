#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace ycurve {

enum class Relation { LessEq, Equal, GreaterEq };

/// Minimisation problem  min c.x  subject to the given rows.  Variables are
/// free by default; a lower bound may be attached per variable.  Free
/// variables are handled internally by splitting into positive parts.
struct LinearProgram {
    struct Row {
        std::vector<double> coeffs;
        Relation relation = Relation::LessEq;
        double rhs = 0.0;
    };

    std::size_t num_vars = 0;
    std::vector<double> objective;
    std::vector<Row> rows;
    /// Empty, or one entry per variable; std::nullopt marks a free variable.
    std::vector<std::optional<double>> lower_bounds;
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexResult {
    SimplexStatus status = SimplexStatus::Optimal;
    std::vector<double> x;
    double objective = 0.0;
    int iterations = 0;
    /// Largest violation of the original rows by x (Optimal results only).
    double feasibility_residual = 0.0;
};

/// Two-phase dense simplex.  Dantzig pricing with a switch to Bland's rule
/// when the objective stalls, which guarantees termination.
SimplexResult simplex_solve(const LinearProgram& lp);

} // namespace ycurve
