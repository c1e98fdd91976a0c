#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ycurve/calibration.hpp"
#include "ycurve/instruments.hpp"
#include "ycurve/tenor_forward.hpp"

namespace ycurve {

/// Market quote file: a `# valuation=YYYY-MM-DD` comment line, a header,
/// then one row per quote.  Deposits and swaps use
/// `kind,maturity_date,par_rate`; futures add their period start:
/// `ff_future,start_date,maturity_date,par_rate`.
struct QuoteFile {
    Date valuation;
    std::vector<Quote> quotes;
};

QuoteFile parse_quotes(const std::string& path);
QuoteFile parse_quotes(std::istream& in, const std::string& name);
void write_quotes(const std::string& path, const QuoteFile& file);
void write_quotes(std::ostream& out, const QuoteFile& file);

/// User-facing curve scheme: the slope scheme of the z representation plus
/// an optional forward-space pricing route for the two schemes that are
/// defined in forward space.
struct SchemeChoice {
    SlopeScheme slope = SlopeScheme::C2Natural;
    std::optional<ForwardSplineKind> forward_pricing;
};

/// Accepts bessel | c2 | smart-quad | area-preserving | harmonic |
/// rational | van-albada | lavery.  Throws on anything else.
SchemeChoice parse_scheme_name(const std::string& name);

/// Calibrated knot table: `# valuation=... scheme=...` then
/// `date,t,z,discount` rows at 12 significant digits.
void write_curve_csv(std::ostream& out, const ZeroCurve& curve);
void write_curve_csv(const std::string& path, const ZeroCurve& curve);
ZeroCurve read_curve_csv(std::istream& in, const std::string& name);
ZeroCurve read_curve_csv(const std::string& path);

/// One sampling row of the report produced by the `sample` command.
struct ReportRow {
    double t = 0.0;
    double discount = 0.0;
    double zero = 0.0;
    double inst_forward = 0.0;
    double one_day_forward = 0.0; // tenor forward at the requested tenor
    double second_deriv = 0.0;    // second derivative of the tenor forward
};

std::vector<ReportRow> sample_curve(const ZeroCurve& curve, double from, double to,
                                    double step, double tenor);
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);
void write_report_csv(const std::string& path, const std::vector<ReportRow>& rows);

/// Shortest decimal with 12 significant digits; used for all file output.
std::string format_number(double value);

} // namespace ycurve
