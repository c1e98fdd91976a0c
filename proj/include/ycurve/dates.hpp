#pragma once

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ycurve {

/// Calendar date, resolved to days since the Unix epoch.
using Date = std::chrono::sys_days;

inline Date make_date(int year, unsigned month, unsigned day) {
    using namespace std::chrono;
    year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                       std::chrono::day{day}};
    if (!ymd.ok())
        throw std::invalid_argument("make_date: invalid calendar date");
    return sys_days{ymd};
}

/// Parses "YYYY-MM-DD".
inline Date parse_date(std::string_view text) {
    int y = 0;
    unsigned m = 0, d = 0;
    if (std::sscanf(std::string(text).c_str(), "%d-%u-%u", &y, &m, &d) != 3)
        throw std::invalid_argument("parse_date: expected YYYY-MM-DD, got '" +
                                    std::string(text) + "'");
    return make_date(y, m, d);
}

inline std::string to_iso_string(Date date) {
    std::chrono::year_month_day ymd{date};
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(ymd.year()),
                  unsigned(ymd.month()), unsigned(ymd.day()));
    return buf;
}

/// Actual number of days from a to b (signed).
inline long day_count(Date a, Date b) {
    return (b - a).count();
}

inline bool is_weekend(Date date) {
    const std::chrono::weekday wd{date};
    return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

/// Next weekday strictly after the given date. Weekends are the only
/// non-business days; holidays are not modelled.
inline Date next_business_day(Date date) {
    Date d = date + std::chrono::days{1};
    while (is_weekend(d))
        d += std::chrono::days{1};
    return d;
}

/// Weekend adjustment, modified-following: roll forward to Monday unless
/// that crosses a month end, in which case roll back to Friday.
inline Date adjust_weekend_modified_following(Date date) {
    if (!is_weekend(date))
        return date;
    Date fwd = date;
    while (is_weekend(fwd))
        fwd += std::chrono::days{1};
    const auto month_of = [](Date d) {
        return std::chrono::year_month_day{d}.month();
    };
    if (month_of(fwd) != month_of(date)) {
        Date back = date;
        while (is_weekend(back))
            back -= std::chrono::days{1};
        return back;
    }
    return fwd;
}

/// Same calendar day n years earlier/later, clamped to the month end when
/// the day does not exist in the target month.
inline Date add_years(Date date, int years) {
    using namespace std::chrono;
    year_month_day ymd{date};
    year_month_day shifted{ymd.year() + std::chrono::years{years}, ymd.month(),
                           ymd.day()};
    if (!shifted.ok())
        shifted = shifted.year() / shifted.month() / std::chrono::last;
    return sys_days{shifted};
}

/// ACT/365-fixed year fraction used for curve times. The day count is exact
/// integer arithmetic; only the final division is floating point.
inline double year_fraction(Date valuation, Date d) {
    const long days = day_count(valuation, d);
    if (days < 0)
        throw std::invalid_argument("year_fraction: date before valuation");
    return static_cast<double>(days) / 365.0;
}

/// ACT/360 accrual fraction used for instrument coupons.
inline double act360(Date start, Date end) {
    return static_cast<double>(day_count(start, end)) / 360.0;
}

} // namespace ycurve
