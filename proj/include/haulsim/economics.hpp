#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace haulsim {

struct Interval {
    double lo = 0;
    double hi = 0;
};

// Market parameter ranges the Monte Carlo draws from, plus the fixed
// financial assumptions. Defaults are the baseline study inputs.
struct ParameterRanges {
    Interval diesel_price{2.21, 4.19};        // $/gal
    Interval electricity_price{0.07, 0.12};   // $/kWh
    Interval e_efficiency{1.7, 2.3};          // kWh/mi
    Interval d_efficiency{6.0, 8.5};          // mpg
    Interval d_repairs{0.15, 0.16};           // $/mi diesel pays over electric
    Interval annual_mileage{80000, 100000};   // mi/yr
    Interval general_op{0.76, 0.81};          // $/mi common to both drivetrains
    Interval battery_price{90, 120};          // $/kWh

    double d_initial_price = 150000;          // diesel tractor, $
    double e_initial_price = 200000;          // electric tractor, $
    double replacement_fraction = 0.30;       // share of runs replacing the pack
    double discount_rate = 0.03;
    double lifetime_miles = 1e6;              // truck retirement odometer
    double driving_days_per_year = 260;
    double replacement_miles = 330000;        // odometer at pack replacement
    double pack_range_mi = 500;               // rated range the pack is sized for
};

ParameterRanges baseline_ranges();

// Throws ConfigError if any range is inverted or a fixed assumption is
// nonsensical. sample_scenarios runs this itself.
void validate_ranges(const ParameterRanges& ranges);

// One Monte Carlo draw. replacement_year is already resolved from the
// replacement odometer and this draw's annual mileage.
struct Scenario {
    double diesel_price = 0;
    double electricity_price = 0;
    double e_efficiency = 0;
    double d_efficiency_mpg = 0;
    double d_repairs = 0;
    double annual_mileage = 0;
    double general_op = 0;
    double battery_price = 0;
    bool needs_replacement = false;
    double replacement_year = 0;
};

// Draws n scenarios. Each range is discretized to grid_points evenly spaced
// values and indices are drawn uniformly; the replacement coin toss uses a
// separate uniform draw against replacement_fraction. One mt19937_64 seeded
// with seed drives everything, so a given (seed, n, grid_points) is fully
// reproducible, and runs differing only in replacement_fraction share every
// other draw.
std::vector<Scenario> sample_scenarios(const ParameterRanges& ranges,
                                       std::size_t n, int grid_points,
                                       std::uint64_t seed);

// amount received `years` from now, discounted to today.
double present_value(double amount, double years, double rate);

// Mortgage-style factor turning an upfront cost into a level annual charge
// over `years` at `rate`. Exactly 1/years at zero rate.
double capital_recovery_factor(double rate, double years);

// Cost of the replacement pack for this draw, discounted to purchase time.
double replacement_cost_pv(const Scenario& s, const ParameterRanges& ranges);

struct CostPerMile {
    double diesel = 0;
    double electric = 0;
};

// Levelized $/mi for both drivetrains under one scenario: amortized purchase
// (plus the discounted replacement pack when drawn), energy, and per-mile
// operating costs.
CostPerMile cost_per_mile(const Scenario& s, const ParameterRanges& ranges);

struct Distribution {
    std::vector<double> samples;
    double mean = 0;
    double std_dev = 0;  // population standard deviation
    double min = 0;
    double max = 0;
};

Distribution make_distribution(std::vector<double> samples);
double median_of(std::vector<double> samples);

struct CpmDistributions {
    Distribution diesel;
    Distribution electric;
};

// Evaluates cost_per_mile over every scenario. threads > 1 splits the work;
// results are written into preallocated slots so the output is byte-stable
// regardless of thread count.
CpmDistributions cpm_distribution(const std::vector<Scenario>& scenarios,
                                  const ParameterRanges& ranges,
                                  int threads = 1);

}  // namespace haulsim
