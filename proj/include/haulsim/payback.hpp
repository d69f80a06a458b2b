#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "haulsim/economics.hpp"
#include "haulsim/powertrain.hpp"

namespace haulsim {

struct PaybackResult {
    bool broke_even = false;
    double payback_yr = 0;    // meaningful only when broke_even
    double odometer_mi = 0;   // miles driven at break-even
};

// Years until the electric truck's discounted operating savings repay its
// purchase premium (plus the discounted replacement pack when drawn).
// Savings accrue yearly and the crossing year is interpolated linearly.
// Scenarios that never cross within the truck's lifetime report
// broke_even = false.
PaybackResult payback_period(const Scenario& s, const ParameterRanges& ranges);

struct PaybackStats {
    Distribution payback;        // break-even scenarios only
    double median_payback_yr = 0;
    double mean_odometer_mi = 0;
    std::size_t n_total = 0;
    std::size_t n_no_breakeven = 0;
    double frac_no_breakeven = 0;
};

PaybackStats payback_distribution(const std::vector<Scenario>& scenarios,
                                  const ParameterRanges& ranges,
                                  int threads = 1);

// Variables sensitivity_sweep knows how to pin. The eight market ranges
// collapse to a point; replacement_fraction and price_differential override
// the financial assumptions directly.
const std::vector<std::string>& sweep_variable_names();

struct SensitivityPoint {
    std::string variable;
    double pinned_value = 0;
    double mean_payback_yr = 0;
    double std_payback_yr = 0;
    double median_payback_yr = 0;
    double frac_no_breakeven = 0;
};

// Re-runs the payback Monte Carlo with one variable pinned to each value in
// turn, everything else at baseline. Each sweep point reseeds independently
// from (seed, point index).
std::vector<SensitivityPoint> sensitivity_sweep(
    const ParameterRanges& ranges, const std::string& variable,
    const std::vector<double>& values, std::size_t n, int grid_points,
    std::uint64_t seed, int threads = 1);

// Shorthand for sweeping the diesel repair premium, the variable the payback
// distribution is most often interrogated on.
std::vector<SensitivityPoint> repairs_sensitivity(
    const ParameterRanges& ranges, const std::vector<double>& values,
    std::size_t n, int grid_points, std::uint64_t seed, int threads = 1);

struct VignettePoint {
    double cd = 0;
    double e_efficiency_kwh_mi = 0;  // cruise intensity at this drag
    double pack_kwh = 0;
    double mean_payback_yr = 0;
    double median_payback_yr = 0;
    double frac_no_breakeven = 0;
};

// What worse aerodynamics does to payback: for each drag coefficient the
// cruise cycle is re-simulated, the pack re-sized, the purchase premium
// adjusted for the larger pack at each draw's battery price, and the payback
// Monte Carlo re-run with energy intensity pinned to the simulated value.
// The first entry of cds is treated as the baseline body.
std::vector<VignettePoint> drag_vignette(const ParameterRanges& ranges,
                                         const VehicleParams& veh,
                                         const std::vector<double>& cds,
                                         std::size_t n, int grid_points,
                                         std::uint64_t seed, int threads = 1);

}  // namespace haulsim
