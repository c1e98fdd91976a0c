#pragma once

#include <concepts>
#include <variant>
#include <vector>

#include "ycurve/curve.hpp"

namespace ycurve {

/// Anything that can discount: the log-discount spline curve and the
/// forward-space curves both qualify.
template <typename C>
concept DiscountingCurve = requires(const C& c, double t) {
    { c.discount(t) } -> std::convertible_to<double>;
    { c.valuation() } -> std::convertible_to<Date>;
};

struct OvernightDeposit {
    Date maturity;
};

/// Averaging period [start, end); the quote is the arithmetic average rate.
struct FedFundFuture {
    Date start;
    Date end;
};

/// Spot-starting swap with annual coupons on the compounded overnight rate.
struct OisSwap {
    Date maturity;
};

using Instrument = std::variant<OvernightDeposit, FedFundFuture, OisSwap>;

struct Quote {
    Instrument instrument;
    double par_rate = 0.0;
};

/// Daily fixing dates with their ACT/360 accruals.  Accruals bridge each
/// fixing to the next one (or to the period end for the last), so they sum
/// to the ACT/360 fraction of the whole period.
struct AccrualSchedule {
    std::vector<Date> fixings;
    std::vector<double> accruals;
    Date end;
};

/// All weekdays in [start, end); accruals are 1/360 except across weekends.
AccrualSchedule business_day_schedule(Date start, Date end);

/// Annual coupon boundaries rolled back from maturity, weekend-adjusted,
/// starting at the valuation date.  Swaps within roughly a year of maturity
/// get a single coupon.
std::vector<Date> ois_coupon_dates(Date valuation, Date maturity);

/// Date of the knot each instrument contributes to a calibrated curve
/// (maturity, or the averaging-period end for futures).
Date instrument_knot_date(const Instrument& instrument);

/// Compounded growth factor over the schedule, computed in telescoped form
/// P(first)/P(end).
template <DiscountingCurve C>
double ois_compounded_coupon_rate(const C& curve, const AccrualSchedule& sched) {
    if (sched.fixings.empty())
        throw std::invalid_argument("ois_compounded_coupon_rate: empty schedule");
    const Date valuation = curve.valuation();
    return curve.discount(year_fraction(valuation, sched.fixings.front())) /
           curve.discount(year_fraction(valuation, sched.end));
}

/// Same factor via the full product of daily pseudo discount ratios; kept
/// as a verification path for the telescoped form.
template <DiscountingCurve C>
double ois_compounded_coupon_rate_product(const C& curve, const AccrualSchedule& sched) {
    if (sched.fixings.empty())
        throw std::invalid_argument("ois_compounded_coupon_rate: empty schedule");
    const Date valuation = curve.valuation();
    double factor = 1.0;
    for (std::size_t j = 0; j < sched.fixings.size(); ++j) {
        const Date next = j + 1 < sched.fixings.size() ? sched.fixings[j + 1] : sched.end;
        factor *= curve.discount(year_fraction(valuation, sched.fixings[j])) /
                  curve.discount(year_fraction(valuation, next));
    }
    return factor;
}

/// Arithmetic average rate over the contract period:
///   R = sum_j (P(t_j)/P(t_{j+1}) - 1) / sum_j delta_j.
template <DiscountingCurve C>
double fed_fund_future_rate(const C& curve, const FedFundFuture& future) {
    const AccrualSchedule sched = business_day_schedule(future.start, future.end);
    const Date valuation = curve.valuation();
    double rate_sum = 0.0;
    double accrual_sum = 0.0;
    for (std::size_t j = 0; j < sched.fixings.size(); ++j) {
        const Date next = j + 1 < sched.fixings.size() ? sched.fixings[j + 1] : sched.end;
        rate_sum += curve.discount(year_fraction(valuation, sched.fixings[j])) /
                        curve.discount(year_fraction(valuation, next)) -
                    1.0;
        accrual_sum += sched.accruals[j];
    }
    return rate_sum / accrual_sum;
}

/// Quoted futures price for a given average rate, F = 100 (1 - R).
inline double fed_fund_future_price(double average_rate) {
    return 100.0 * (1.0 - average_rate);
}

template <DiscountingCurve C>
double deposit_par_rate(const C& curve, const OvernightDeposit& deposit) {
    const Date valuation = curve.valuation();
    const double accrual = act360(valuation, deposit.maturity);
    return (curve.discount(0.0) / curve.discount(year_fraction(valuation, deposit.maturity)) -
            1.0) /
           accrual;
}

/// PV per unit notional of the deposit at the given fixed rate.
template <DiscountingCurve C>
double price_overnight_deposit(const C& curve, const OvernightDeposit& deposit,
                               double par_rate) {
    const Date valuation = curve.valuation();
    const double accrual = act360(valuation, deposit.maturity);
    return curve.discount(0.0) /
               curve.discount(year_fraction(valuation, deposit.maturity)) -
           1.0 - par_rate * accrual;
}

template <DiscountingCurve C>
double ois_swap_par_rate(const C& curve, const OisSwap& swap) {
    const Date valuation = curve.valuation();
    const auto bounds = ois_coupon_dates(valuation, swap.maturity);
    double floating = 0.0;
    double annuity = 0.0;
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        const double ps = curve.discount(year_fraction(valuation, bounds[c]));
        const double pe = curve.discount(year_fraction(valuation, bounds[c + 1]));
        floating += ps - pe;
        annuity += act360(bounds[c], bounds[c + 1]) * pe;
    }
    return floating / annuity;
}

/// PV per unit notional, receiving the compounded overnight leg against the
/// fixed rate.  Payment lags are neglected, so each coupon contributes
/// P(start) - P(end) - r delta P(end).
template <DiscountingCurve C>
double price_ois_swap(const C& curve, const OisSwap& swap, double par_rate) {
    if (swap.maturity <= curve.valuation())
        throw std::invalid_argument("price_ois_swap: maturity before valuation");
    const Date valuation = curve.valuation();
    const auto bounds = ois_coupon_dates(valuation, swap.maturity);
    double pv = 0.0;
    for (std::size_t c = 0; c + 1 < bounds.size(); ++c) {
        const double ps = curve.discount(year_fraction(valuation, bounds[c]));
        const double pe = curve.discount(year_fraction(valuation, bounds[c + 1]));
        pv += ps - pe - par_rate * act360(bounds[c], bounds[c + 1]) * pe;
    }
    return pv;
}

/// Curve-implied par value of any instrument, in the same units as its
/// market quote (rate for deposits and swaps, average rate for futures).
template <DiscountingCurve C>
double model_par_rate(const C& curve, const Instrument& instrument) {
    return std::visit(
        [&](const auto& inst) -> double {
            using T = std::decay_t<decltype(inst)>;
            if constexpr (std::is_same_v<T, OvernightDeposit>)
                return deposit_par_rate(curve, inst);
            else if constexpr (std::is_same_v<T, FedFundFuture>)
                return fed_fund_future_rate(curve, inst);
            else
                return ois_swap_par_rate(curve, inst);
        },
        instrument);
}

} // namespace ycurve
