#include "haulsim/payback.hpp"

#include <algorithm>
#include <cmath>

#include "haulsim/battery.hpp"
#include "haulsim/errors.hpp"
#include "haulsim/rng.hpp"
#include "parallel.hpp"

namespace haulsim {

namespace {

// Core accrual: years until discounted yearly savings cover the given
// upfront obligation, interpolated within the crossing year. The vignette
// reuses this with a pack-adjusted purchase premium.
PaybackResult payback_against(const Scenario& s, const ParameterRanges& ranges,
                              double premium) {
    if (s.annual_mileage <= 0 || s.d_efficiency_mpg <= 0) {
        throw ArgumentError("scenario mileage and fuel economy must be positive");
    }
    double savings = (s.diesel_price / s.d_efficiency_mpg + s.d_repairs -
                      s.electricity_price * s.e_efficiency) *
                     s.annual_mileage;
    double obligation = premium;
    if (s.needs_replacement) {
        obligation += replacement_cost_pv(s, ranges);
    }
    double lifetime_years = ranges.lifetime_miles / s.annual_mileage;

    if (obligation <= 0.0) {
        return {true, 0.0, 0.0};
    }
    if (savings <= 0.0) {
        return {false, 0.0, 0.0};
    }

    double rate = ranges.discount_rate;
    if (rate == 0.0) {
        // undiscounted accrual is linear, so the crossing is exact
        double t = obligation / savings;
        if (t <= lifetime_years) {
            return {true, t, t * s.annual_mileage};
        }
        return {false, 0.0, 0.0};
    }

    double cumulative = 0.0;
    auto last_year = static_cast<int>(std::ceil(lifetime_years)) + 1;
    for (int k = 1; k <= last_year; ++k) {
        double pv = savings / std::pow(1.0 + rate, static_cast<double>(k));
        if (cumulative + pv >= obligation) {
            double t = (k - 1) + (obligation - cumulative) / pv;
            if (t <= lifetime_years) {
                return {true, t, t * s.annual_mileage};
            }
            return {false, 0.0, 0.0};
        }
        cumulative += pv;
    }
    return {false, 0.0, 0.0};
}

}  // namespace

PaybackResult payback_period(const Scenario& s, const ParameterRanges& ranges) {
    return payback_against(s, ranges,
                           ranges.e_initial_price - ranges.d_initial_price);
}

PaybackStats payback_distribution(const std::vector<Scenario>& scenarios,
                                  const ParameterRanges& ranges, int threads) {
    std::vector<PaybackResult> results(scenarios.size());
    detail::for_chunks(scenarios.size(), threads,
                       [&](std::size_t begin, std::size_t end) {
                           for (std::size_t i = begin; i < end; ++i) {
                               results[i] = payback_period(scenarios[i], ranges);
                           }
                       });

    PaybackStats stats;
    stats.n_total = scenarios.size();
    std::vector<double> years;
    years.reserve(scenarios.size());
    double odometer_sum = 0.0;
    for (const PaybackResult& r : results) {
        if (r.broke_even) {
            years.push_back(r.payback_yr);
            odometer_sum += r.odometer_mi;
        } else {
            ++stats.n_no_breakeven;
        }
    }
    stats.frac_no_breakeven = stats.n_total == 0
                                  ? 0.0
                                  : static_cast<double>(stats.n_no_breakeven) /
                                        static_cast<double>(stats.n_total);
    if (!years.empty()) {
        stats.mean_odometer_mi = odometer_sum / static_cast<double>(years.size());
        stats.median_payback_yr = median_of(years);
    }
    stats.payback = make_distribution(std::move(years));
    return stats;
}

const std::vector<std::string>& sweep_variable_names() {
    static const std::vector<std::string> names = {
        "diesel_price",    "electricity_price", "e_efficiency",
        "d_efficiency",    "d_repairs",         "annual_mileage",
        "general_op",      "battery_price",     "replacement_fraction",
        "price_differential",
    };
    return names;
}

namespace {

ParameterRanges pin_variable(const ParameterRanges& base, const std::string& variable,
                             double value) {
    ParameterRanges r = base;
    if (variable == "diesel_price") {
        r.diesel_price = {value, value};
    } else if (variable == "electricity_price") {
        r.electricity_price = {value, value};
    } else if (variable == "e_efficiency") {
        r.e_efficiency = {value, value};
    } else if (variable == "d_efficiency") {
        r.d_efficiency = {value, value};
    } else if (variable == "d_repairs") {
        r.d_repairs = {value, value};
    } else if (variable == "annual_mileage") {
        r.annual_mileage = {value, value};
    } else if (variable == "general_op") {
        r.general_op = {value, value};
    } else if (variable == "battery_price") {
        r.battery_price = {value, value};
    } else if (variable == "replacement_fraction") {
        r.replacement_fraction = value;
    } else if (variable == "price_differential") {
        r.e_initial_price = r.d_initial_price + value;
    } else {
        std::string names;
        for (const auto& n : sweep_variable_names()) {
            names += names.empty() ? n : ", " + n;
        }
        throw ArgumentError("unknown sweep variable '" + variable +
                            "' (expected one of: " + names + ")");
    }
    return r;
}

}  // namespace

std::vector<SensitivityPoint> sensitivity_sweep(
    const ParameterRanges& ranges, const std::string& variable,
    const std::vector<double>& values, std::size_t n, int grid_points,
    std::uint64_t seed, int threads) {
    if (values.empty()) {
        throw ArgumentError("sensitivity sweep needs at least one value");
    }
    std::vector<SensitivityPoint> points;
    points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        ParameterRanges pinned = pin_variable(ranges, variable, values[i]);
        auto scenarios =
            sample_scenarios(pinned, n, grid_points, derive_seed(seed, i));
        PaybackStats stats = payback_distribution(scenarios, pinned, threads);
        SensitivityPoint p;
        p.variable = variable;
        p.pinned_value = values[i];
        p.mean_payback_yr = stats.payback.mean;
        p.std_payback_yr = stats.payback.std_dev;
        p.median_payback_yr = stats.median_payback_yr;
        p.frac_no_breakeven = stats.frac_no_breakeven;
        points.push_back(std::move(p));
    }
    return points;
}

std::vector<SensitivityPoint> repairs_sensitivity(
    const ParameterRanges& ranges, const std::vector<double>& values,
    std::size_t n, int grid_points, std::uint64_t seed, int threads) {
    return sensitivity_sweep(ranges, "d_repairs", values, n, grid_points, seed,
                             threads);
}

std::vector<VignettePoint> drag_vignette(const ParameterRanges& ranges,
                                         const VehicleParams& veh,
                                         const std::vector<double>& cds,
                                         std::size_t n, int grid_points,
                                         std::uint64_t seed, int threads) {
    if (cds.empty()) {
        throw ArgumentError("drag vignette needs at least one drag coefficient");
    }
    DriveCycle cruise =
        synth_cycle(CycleKind::cruise, default_synth_params(CycleKind::cruise));
    RoadProfile flat;

    auto intensity_at = [&](double cd) {
        VehicleParams v = veh;
        v.cd = cd;
        return simulate_cycle(cruise, v, flat).energy_per_mile;
    };

    // cds[0] is the body the baseline sticker price was quoted for; larger
    // packs at other drags are charged at each draw's battery price.
    double base_pack_kwh =
        size_pack(ranges.pack_range_mi, intensity_at(cds[0])).capacity_kwh;
    double base_premium = ranges.e_initial_price - ranges.d_initial_price;

    std::vector<VignettePoint> points;
    points.reserve(cds.size());
    for (double cd : cds) {
        double epm = intensity_at(cd);
        double pack_kwh = size_pack(ranges.pack_range_mi, epm).capacity_kwh;

        ParameterRanges pinned = ranges;
        pinned.e_efficiency = {epm, epm};
        auto scenarios = sample_scenarios(pinned, n, grid_points, seed);

        std::vector<PaybackResult> results(scenarios.size());
        detail::for_chunks(
            scenarios.size(), threads, [&](std::size_t begin, std::size_t end) {
                for (std::size_t i = begin; i < end; ++i) {
                    const Scenario& s = scenarios[i];
                    double premium =
                        base_premium + (pack_kwh - base_pack_kwh) * s.battery_price;
                    results[i] = payback_against(s, pinned, premium);
                }
            });

        std::vector<double> years;
        std::size_t no_breakeven = 0;
        for (const PaybackResult& r : results) {
            if (r.broke_even) {
                years.push_back(r.payback_yr);
            } else {
                ++no_breakeven;
            }
        }
        VignettePoint p;
        p.cd = cd;
        p.e_efficiency_kwh_mi = epm;
        p.pack_kwh = pack_kwh;
        p.median_payback_yr = median_of(years);
        Distribution dist = make_distribution(std::move(years));
        p.mean_payback_yr = dist.mean;
        p.frac_no_breakeven = scenarios.empty()
                                  ? 0.0
                                  : static_cast<double>(no_breakeven) /
                                        static_cast<double>(scenarios.size());
        points.push_back(p);
    }
    return points;
}

}  // namespace haulsim
