#include "ycurve/instruments.hpp"

#include <algorithm>
#include <stdexcept>

namespace ycurve {

AccrualSchedule business_day_schedule(Date start, Date end) {
    if (!(start < end))
        throw std::invalid_argument("business_day_schedule: start must precede end");
    AccrualSchedule sched;
    sched.end = end;
    Date d = start;
    while (is_weekend(d))
        d += std::chrono::days{1};
    while (d < end) {
        sched.fixings.push_back(d);
        d = next_business_day(d);
    }
    for (std::size_t j = 0; j < sched.fixings.size(); ++j) {
        const Date next = j + 1 < sched.fixings.size() ? sched.fixings[j + 1] : end;
        sched.accruals.push_back(act360(sched.fixings[j], next));
    }
    return sched;
}

std::vector<Date> ois_coupon_dates(Date valuation, Date maturity) {
    if (!(valuation < maturity))
        throw std::invalid_argument("ois_coupon_dates: maturity before valuation");
    std::vector<Date> bounds{maturity};
    // A short first period from date-roll slop is absorbed into the stub.
    const Date cutoff = valuation + std::chrono::days{7};
    for (int k = 1;; ++k) {
        const Date anniversary = add_years(maturity, -k);
        if (anniversary <= cutoff)
            break;
        bounds.push_back(adjust_weekend_modified_following(anniversary));
    }
    bounds.push_back(valuation);
    std::reverse(bounds.begin(), bounds.end());
    return bounds;
}

Date instrument_knot_date(const Instrument& instrument) {
    return std::visit(
        [](const auto& inst) -> Date {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, FedFundFuture>)
                return inst.end;
            else
                return inst.maturity;
        },
        instrument);
}

} // namespace ycurve
