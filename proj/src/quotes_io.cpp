#include "ycurve/quotes_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ycurve {

namespace {

[[noreturn]] void fail_at(const std::string& name, int line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

double parse_rate(const std::string& text, const std::string& name, int line) {
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &pos);
    } catch (const std::exception&) {
        fail_at(name, line, "bad number '" + text + "'");
    }
    if (pos != text.size() || !std::isfinite(value))
        fail_at(name, line, "bad number '" + text + "'");
    return value;
}

Date parse_date_at(const std::string& text, const std::string& name, int line) {
    try {
        return parse_date(text);
    } catch (const std::exception& e) {
        fail_at(name, line, e.what());
    }
}

Date parse_valuation_line(const std::string& line, const std::string& name) {
    const std::string prefix = "# valuation=";
    if (line.rfind(prefix, 0) != 0)
        fail_at(name, 1, "expected '# valuation=YYYY-MM-DD' on the first line");
    std::string rest = line.substr(prefix.size());
    const auto space = rest.find(' ');
    if (space != std::string::npos)
        rest = rest.substr(0, space);
    return parse_date_at(rest, name, 1);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

} // namespace

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

QuoteFile parse_quotes(std::istream& in, const std::string& name) {
    QuoteFile file{};
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line))
        throw std::runtime_error(name + ": empty file");
    ++lineno;
    file.valuation = parse_valuation_line(line, name);

    if (!std::getline(in, line))
        throw std::runtime_error(name + ": missing header row");
    ++lineno;
    if (line.find("instrument_kind") == std::string::npos)
        fail_at(name, lineno, "expected header row");

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        const auto fields = split_csv(line);
        if (fields.size() != 3 && fields.size() != 4)
            fail_at(name, lineno, "expected 3 or 4 fields, got " +
                                      std::to_string(fields.size()));
        const std::string& kind = fields[0];
        const double rate = parse_rate(fields.back(), name, lineno);
        if (kind == "ois_deposit") {
            if (fields.size() != 3)
                fail_at(name, lineno, "ois_deposit rows take kind,maturity,rate");
            file.quotes.push_back(
                {OvernightDeposit{parse_date_at(fields[1], name, lineno)}, rate});
        } else if (kind == "ff_future") {
            if (fields.size() != 4)
                fail_at(name, lineno, "ff_future rows take kind,start,maturity,rate");
            file.quotes.push_back({FedFundFuture{parse_date_at(fields[1], name, lineno),
                                                 parse_date_at(fields[2], name, lineno)},
                                   rate});
        } else if (kind == "ois_swap") {
            if (fields.size() != 3)
                fail_at(name, lineno, "ois_swap rows take kind,maturity,rate");
            file.quotes.push_back(
                {OisSwap{parse_date_at(fields[1], name, lineno)}, rate});
        } else {
            fail_at(name, lineno, "unknown instrument kind '" + kind + "'");
        }
    }
    if (file.quotes.empty())
        throw std::runtime_error(name + ": no quotes");
    return file;
}

QuoteFile parse_quotes(const std::string& path) {
    auto in = open_input(path);
    return parse_quotes(in, path);
}

void write_quotes(std::ostream& out, const QuoteFile& file) {
    out << "# valuation=" << to_iso_string(file.valuation) << "\n";
    out << "instrument_kind,start_date,maturity_date,par_rate\n";
    for (const Quote& q : file.quotes) {
        std::visit(
            [&](const auto& inst) {
                using T = std::decay_t<decltype(inst)>;
                if constexpr (std::is_same_v<T, OvernightDeposit>)
                    out << "ois_deposit," << to_iso_string(inst.maturity);
                else if constexpr (std::is_same_v<T, FedFundFuture>)
                    out << "ff_future," << to_iso_string(inst.start) << ","
                        << to_iso_string(inst.end);
                else
                    out << "ois_swap," << to_iso_string(inst.maturity);
            },
            q.instrument);
        out << "," << format_number(q.par_rate) << "\n";
    }
}

void write_quotes(const std::string& path, const QuoteFile& file) {
    auto out = open_output(path);
    write_quotes(out, file);
}

SchemeChoice parse_scheme_name(const std::string& name) {
    if (name == "bessel")
        return {SlopeScheme::Bessel, std::nullopt};
    if (name == "c2")
        return {SlopeScheme::C2Natural, std::nullopt};
    if (name == "smart-quad")
        return {SlopeScheme::Bessel, ForwardSplineKind::SmartQuadratic};
    if (name == "area-preserving")
        return {SlopeScheme::C2Natural, ForwardSplineKind::AreaPreserving};
    if (name == "harmonic")
        return {SlopeScheme::Harmonic, std::nullopt};
    if (name == "rational")
        return {SlopeScheme::RationalLimiter, std::nullopt};
    if (name == "van-albada")
        return {SlopeScheme::VanAlbada, std::nullopt};
    if (name == "lavery")
        return {SlopeScheme::Lavery, std::nullopt};
    throw std::runtime_error("unknown scheme '" + name + "'");
}

void write_curve_csv(std::ostream& out, const ZeroCurve& curve) {
    out << "# valuation=" << to_iso_string(curve.valuation())
        << " scheme=" << to_string(curve.scheme()) << "\n";
    out << "date,t,z,discount\n";
    const auto& times = curve.grid().times();
    const auto& z = curve.log_discounts();
    for (std::size_t i = 0; i < times.size(); ++i) {
        const Date d = curve.valuation() +
                       std::chrono::days{static_cast<long>(std::lround(times[i] * 365.0))};
        out << to_iso_string(d) << "," << format_number(times[i]) << ","
            << format_number(z[i]) << "," << format_number(std::exp(z[i])) << "\n";
    }
}

void write_curve_csv(const std::string& path, const ZeroCurve& curve) {
    auto out = open_output(path);
    write_curve_csv(out, curve);
}

ZeroCurve read_curve_csv(std::istream& in, const std::string& name) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(name + ": empty file");
    const Date valuation = parse_valuation_line(line, name);
    const std::string scheme_key = " scheme=";
    const auto pos = line.find(scheme_key);
    if (pos == std::string::npos)
        fail_at(name, 1, "missing scheme tag");
    const SchemeChoice scheme = parse_scheme_name(line.substr(pos + scheme_key.size()));

    if (!std::getline(in, line) || line.find("date") == std::string::npos)
        throw std::runtime_error(name + ": missing header row");

    std::vector<Date> dates;
    std::vector<double> z;
    int lineno = 2;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        const auto fields = split_csv(line);
        if (fields.size() != 4)
            fail_at(name, lineno, "expected date,t,z,discount");
        // day counts are exact; recompute t from the date column
        dates.push_back(parse_date_at(fields[0], name, lineno));
        z.push_back(parse_rate(fields[2], name, lineno));
    }
    if (dates.size() < 2)
        throw std::runtime_error(name + ": need at least two knots");
    return build_zero_curve(DateGrid::from_dates(valuation, dates), std::move(z),
                            scheme.slope);
}

ZeroCurve read_curve_csv(const std::string& path) {
    auto in = open_input(path);
    return read_curve_csv(in, path);
}

std::vector<ReportRow> sample_curve(const ZeroCurve& curve, double from, double to,
                                    double step, double tenor) {
    if (!(step > 0.0) || !(to >= from) || from < 0.0)
        throw std::invalid_argument("sample_curve: bad sampling range");
    const TenorForwardCurve fc = tenor_curve_from_zero_curve(curve, tenor);
    std::vector<ReportRow> rows;
    for (double t = from; t <= to + 1e-12; t += step) {
        ReportRow row;
        const CurveSample s = curve.sample(t);
        row.t = t;
        row.discount = s.discount;
        row.zero = s.zero;
        row.inst_forward = s.inst_forward;
        row.one_day_forward = fc.value(t);
        row.second_deriv = fc.second_derivative(t);
        rows.push_back(row);
    }
    return rows;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
    out << "t,discount,zero,inst_forward,one_day_forward,second_deriv\n";
    for (const ReportRow& r : rows)
        out << format_number(r.t) << "," << format_number(r.discount) << ","
            << format_number(r.zero) << "," << format_number(r.inst_forward) << ","
            << format_number(r.one_day_forward) << "," << format_number(r.second_deriv)
            << "\n";
}

void write_report_csv(const std::string& path, const std::vector<ReportRow>& rows) {
    auto out = open_output(path);
    write_report_csv(out, rows);
}

} // namespace ycurve
