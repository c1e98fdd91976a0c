#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ycurve/curve.hpp"

namespace ycurve {

/// Uniform draw in [0, 1) from the top 53 bits of the generator, so the
/// stream is identical across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct SyntheticCurveSpec {
    int min_knots = 3;
    int max_knots = 20;
    double forward_min = -0.02;
    double forward_max = 0.08;
    double min_spacing = 0.05;
    double max_spacing = 3.0;
};

/// Random non-uniform grid with discrete forwards drawn per interval and
/// the cumulated log-discount values they imply.
struct SyntheticCurve {
    DateGrid grid;
    std::vector<double> fd; // discrete forwards, one per interval
    std::vector<double> z;  // z_0 = 0, z_{i+1} = z_i - fd_i h_i
};

SyntheticCurve make_synthetic_curve(std::mt19937_64& rng,
                                    const SyntheticCurveSpec& spec = {});

/// Largest pointwise deviations between the forward-space evaluations and
/// the derivative of the matching log-discount spline, relative to the
/// forward scale, over seeded random curves.
struct EquivalenceReport {
    double smart_quadratic_max_dev = 0.0; // vs Bessel-Hermite -p'
    double area_preserving_max_dev = 0.0; // vs natural C^2 -p'
    double tenor_cubic_coeff_max = 0.0;   // cubic term on tenor-interior intervals
    int curves = 0;
    int samples_per_curve = 0;

    bool all_within(double tol) const {
        return smart_quadratic_max_dev < tol && area_preserving_max_dev < tol &&
               tenor_cubic_coeff_max < tol;
    }
};

EquivalenceReport run_equivalence_scans(std::uint64_t seed, int curves,
                                        int samples_per_curve,
                                        const SyntheticCurveSpec& spec = {});

/// Scan a single curve: max |forward-space eval + p'(t)| over uniform
/// samples, divided by the largest forward magnitude seen.
double smart_quadratic_deviation(const SyntheticCurve& curve, int samples);
double area_preserving_deviation(const SyntheticCurve& curve, int samples);

/// Max cubic coefficient of the tenor-forward curve on intervals interior
/// to (t_i, t_{i+1} - tenor), relative to the largest cubic coefficient
/// anywhere on the tenor curve.
double tenor_quadratic_reduction(const ZeroCurve& curve, double tenor);

} // namespace ycurve
