#pragma once

#include <span>

#include "ycurve/interpolation.hpp"

namespace ycurve {

/// Quadrature resolution for the discretised L1 objective.  An odd sample
/// count keeps the interval midpoints on the sample grid; monotone optima
/// tend to have their p'' sign change exactly there, and a grid that skips
/// the midpoint biases the discretised objective against them.
struct LaverySpec {
    int samples_per_interval = 17; // >= 2, trapezoid points per interval
};

/// Slopes of the C^1 cubic minimising the discretised integral of |p''|,
/// computed by linear programming with epigraph variables for the absolute
/// values.  End slopes satisfy the natural boundary conditions; leaving
/// them free admits a strictly cheaper interpolant that overshoots next to
/// a boundary-adjacent step.
/// Throws std::runtime_error with solver diagnostics on failure.
SlopeVector lavery_slopes(const DateGrid& grid, std::span<const double> values,
                          const LaverySpec& spec = {});

/// The discretised objective evaluated at a given slope vector (same
/// sample points and trapezoid weights as lavery_slopes).
double lavery_objective(const DateGrid& grid, std::span<const double> values,
                        std::span<const double> slopes,
                        const LaverySpec& spec = {});

} // namespace ycurve
