#pragma once

#include <string>

#include "ycurve/calibration.hpp"
#include "ycurve/quotes_io.hpp"

namespace fixtures {

inline std::string quotes_path() {
    return std::string(YCURVE_DATA_DIR) + "/fedfund_2019-11-06.csv";
}

inline const ycurve::QuoteFile& fedfund_quotes() {
    static const ycurve::QuoteFile file = ycurve::parse_quotes(quotes_path());
    return file;
}

inline ycurve::CalibrationProblem fedfund_problem(
    ycurve::SlopeScheme scheme = ycurve::SlopeScheme::C2Natural) {
    const auto& file = fedfund_quotes();
    ycurve::CalibrationProblem problem;
    problem.valuation = file.valuation;
    problem.quotes = file.quotes;
    problem.scheme = scheme;
    return problem;
}

/// Calibrated once and shared; curves are immutable so this is safe.
inline const ycurve::CalibrationResult& fedfund_calibration() {
    static const ycurve::CalibrationResult result =
        ycurve::calibrate(fedfund_problem());
    return result;
}

} // namespace fixtures
