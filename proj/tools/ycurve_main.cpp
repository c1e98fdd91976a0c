#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ycurve/calibration.hpp"
#include "ycurve/equivalence.hpp"
#include "ycurve/quotes_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitInput = 2;

int run_calibrate(const std::string& quotes_path, const std::string& scheme_name,
                  const std::string& out_path) {
    const ycurve::QuoteFile quotes = ycurve::parse_quotes(quotes_path);
    const ycurve::SchemeChoice scheme = ycurve::parse_scheme_name(scheme_name);

    ycurve::CalibrationProblem problem;
    problem.valuation = quotes.valuation;
    problem.quotes = quotes.quotes;
    problem.scheme = scheme.slope;
    problem.forward_pricing = scheme.forward_pricing;
    problem.enable_lavery = scheme.slope == ycurve::SlopeScheme::Lavery;

    const ycurve::CalibrationResult result = ycurve::calibrate(problem);
    double max_residual = 0.0;
    for (double r : result.residuals)
        max_residual = std::max(max_residual, std::abs(r));
    std::cout << "calibrated " << problem.quotes.size() << " quotes in "
              << result.iterations << " iterations, max residual "
              << ycurve::format_number(max_residual) << "\n";
    ycurve::write_curve_csv(out_path, result.curve);
    if (!result.converged) {
        std::cerr << "calibration did not converge\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int run_sample(const std::string& curve_path, double from, double to, double step,
               double tenor, const std::string& out_path) {
    const ycurve::ZeroCurve curve = ycurve::read_curve_csv(curve_path);
    const double hi = to > 0.0 ? to : curve.grid().back();
    const auto rows = ycurve::sample_curve(curve, from, hi, step, tenor);
    ycurve::write_report_csv(out_path, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return kExitOk;
}

int run_equivalence_report(const std::string& quotes_path, std::uint64_t seed,
                           int points) {
    constexpr double tol = 1e-11;
    ycurve::SyntheticCurveSpec spec;
    spec.min_knots = 12;
    spec.max_knots = 12;
    const ycurve::EquivalenceReport report =
        ycurve::run_equivalence_scans(seed, 100, points, spec);
    std::cout << "smart-quad vs hermite spline derivative: max relative deviation "
              << ycurve::format_number(report.smart_quadratic_max_dev) << "\n";
    std::cout << "area-preserving vs c2 spline derivative: max relative deviation "
              << ycurve::format_number(report.area_preserving_max_dev) << "\n";
    std::cout << "tenor forward cubic term on interior intervals: max relative size "
              << ycurve::format_number(report.tenor_cubic_coeff_max) << "\n";

    bool ok = report.all_within(tol);
    if (!quotes_path.empty()) {
        const ycurve::QuoteFile quotes = ycurve::parse_quotes(quotes_path);
        ycurve::CalibrationProblem problem;
        problem.valuation = quotes.valuation;
        problem.quotes = quotes.quotes;
        problem.scheme = ycurve::SlopeScheme::C2Natural;
        const ycurve::CalibrationResult result = ycurve::calibrate(problem);
        const double tenor_dev =
            ycurve::tenor_quadratic_reduction(result.curve, 1.0 / 365.0);
        std::cout << "tenor forward cubic term on calibrated curve: "
                  << ycurve::format_number(tenor_dev) << "\n";
        ok = ok && tenor_dev < tol;
    }
    std::cout << (ok ? "all deviations within " : "DEVIATION ABOVE ")
              << ycurve::format_number(tol) << "\n";
    return ok ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Yield curve construction and interpolation toolkit"};
    app.require_subcommand(1);

    std::string quotes_path, out_path, curve_path;
    std::string scheme_name = "c2";
    double from = 0.0, to = 0.0, step = 0.01, tenor = 1.0 / 365.0;
    std::uint64_t seed = 42;
    int points = 10000;

    auto* cal = app.add_subcommand("calibrate", "fit a curve to market quotes");
    cal->add_option("--quotes", quotes_path, "quote CSV file")->required();
    cal->add_option("--scheme", scheme_name,
                    "bessel|c2|smart-quad|area-preserving|harmonic|rational|"
                    "van-albada|lavery");
    cal->add_option("--out", out_path, "output knot table CSV")->required();

    auto* smp = app.add_subcommand("sample", "sample a calibrated curve");
    smp->add_option("--curve", curve_path, "knot table CSV from calibrate")->required();
    smp->add_option("--from", from, "start time (years)");
    smp->add_option("--to", to, "end time (years, defaults to the last knot)");
    smp->add_option("--step", step, "grid step (years)");
    smp->add_option("--tenor", tenor, "tenor for the discrete forward column (years)");
    smp->add_option("--out", out_path, "output CSV")->required();

    auto* eqv = app.add_subcommand("equivalence-report",
                                   "verify the forward-space / z-space equivalences");
    eqv->add_option("--quotes", quotes_path, "optional quote CSV for a calibrated check");
    eqv->add_option("--seed", seed, "random seed");
    eqv->add_option("--points", points, "sample points per curve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (cal->parsed())
            return run_calibrate(quotes_path, scheme_name, out_path);
        if (smp->parsed())
            return run_sample(curve_path, from, to, step, tenor, out_path);
        return run_equivalence_report(quotes_path, seed, points);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        std::cerr << "error: " << msg << "\n";
        // file and parse problems are input errors; the rest are numeric
        if (msg.find("cannot open") != std::string::npos ||
            msg.find(".csv") != std::string::npos ||
            msg.find("unknown scheme") != std::string::npos)
            return kExitInput;
        return kExitNumeric;
    }
}
