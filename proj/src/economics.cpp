#include "haulsim/economics.hpp"

#include <algorithm>
#include <cmath>

#include "haulsim/errors.hpp"
#include "haulsim/rng.hpp"
#include "parallel.hpp"

namespace haulsim {

ParameterRanges baseline_ranges() { return ParameterRanges{}; }

namespace {

void check_interval(const Interval& iv, const char* what, bool positive) {
    if (!(iv.lo <= iv.hi)) {
        throw ConfigError(std::string(what) + ": range low exceeds high");
    }
    if (positive && iv.lo <= 0) {
        throw ConfigError(std::string(what) + ": range must be positive");
    }
}

}  // namespace

void validate_ranges(const ParameterRanges& r) {
    check_interval(r.diesel_price, "diesel_price", true);
    check_interval(r.electricity_price, "electricity_price", true);
    check_interval(r.e_efficiency, "e_efficiency", true);
    check_interval(r.d_efficiency, "d_efficiency", true);
    check_interval(r.d_repairs, "d_repairs", false);
    check_interval(r.annual_mileage, "annual_mileage", true);
    check_interval(r.general_op, "general_op", false);
    check_interval(r.battery_price, "battery_price", true);
    if (r.replacement_fraction < 0 || r.replacement_fraction > 1) {
        throw ConfigError("replacement_fraction must lie in [0, 1]");
    }
    if (r.discount_rate <= -1) {
        throw ConfigError("discount_rate must exceed -100%");
    }
    if (r.lifetime_miles <= 0 || r.replacement_miles <= 0 || r.pack_range_mi <= 0 ||
        r.driving_days_per_year <= 0) {
        throw ConfigError("lifetime, replacement odometer, pack range, and "
                          "driving days must be positive");
    }
}

namespace {

double grid_value(const Interval& iv, int grid_points, std::uint64_t idx) {
    if (grid_points == 1) {
        return iv.lo;
    }
    return iv.lo + (iv.hi - iv.lo) * static_cast<double>(idx) /
                       static_cast<double>(grid_points - 1);
}

}  // namespace

std::vector<Scenario> sample_scenarios(const ParameterRanges& ranges,
                                       std::size_t n, int grid_points,
                                       std::uint64_t seed) {
    validate_ranges(ranges);
    if (n == 0) {
        throw ArgumentError("sample count must be positive");
    }
    if (grid_points < 1) {
        throw ArgumentError("grid_points must be at least 1");
    }

    std::mt19937_64 eng(seed);
    auto gp = static_cast<std::uint64_t>(grid_points);
    auto draw = [&](const Interval& iv) {
        return grid_value(iv, grid_points, uniform_index(eng, gp));
    };

    std::vector<Scenario> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Scenario s;
        s.diesel_price = draw(ranges.diesel_price);
        s.electricity_price = draw(ranges.electricity_price);
        s.e_efficiency = draw(ranges.e_efficiency);
        s.d_efficiency_mpg = draw(ranges.d_efficiency);
        s.d_repairs = draw(ranges.d_repairs);
        s.annual_mileage = draw(ranges.annual_mileage);
        s.general_op = draw(ranges.general_op);
        s.battery_price = draw(ranges.battery_price);
        // The coin toss consumes a draw whatever the fraction is, so runs
        // differing only in replacement_fraction see identical market draws.
        s.needs_replacement = uniform01(eng) < ranges.replacement_fraction;
        s.replacement_year = ranges.replacement_miles / s.annual_mileage;
        out.push_back(s);
    }
    return out;
}

double present_value(double amount, double years, double rate) {
    if (years < 0) {
        throw ArgumentError("cannot discount to a negative horizon");
    }
    if (rate <= -1) {
        throw ArgumentError("discount rate must exceed -100%");
    }
    return amount / std::pow(1.0 + rate, years);
}

double capital_recovery_factor(double rate, double years) {
    if (years <= 0) {
        throw ArgumentError("amortization horizon must be positive");
    }
    if (rate <= -1) {
        throw ArgumentError("rate must exceed -100%");
    }
    if (rate == 0.0) {
        return 1.0 / years;
    }
    return rate / (1.0 - std::pow(1.0 + rate, -years));
}

double replacement_cost_pv(const Scenario& s, const ParameterRanges& ranges) {
    double pack_kwh = ranges.pack_range_mi * s.e_efficiency;
    return present_value(pack_kwh * s.battery_price, s.replacement_year,
                         ranges.discount_rate);
}

CostPerMile cost_per_mile(const Scenario& s, const ParameterRanges& ranges) {
    if (s.annual_mileage <= 0 || s.d_efficiency_mpg <= 0) {
        throw ArgumentError("scenario mileage and fuel economy must be positive");
    }
    double lifetime_years = ranges.lifetime_miles / s.annual_mileage;
    double crf = capital_recovery_factor(ranges.discount_rate, lifetime_years);

    CostPerMile out;
    out.diesel = ranges.d_initial_price * crf / s.annual_mileage +
                 s.diesel_price / s.d_efficiency_mpg + s.general_op + s.d_repairs;

    double capital = ranges.e_initial_price;
    if (s.needs_replacement) {
        capital += replacement_cost_pv(s, ranges);
    }
    out.electric = capital * crf / s.annual_mileage +
                   s.electricity_price * s.e_efficiency + s.general_op;
    return out;
}

Distribution make_distribution(std::vector<double> samples) {
    Distribution d;
    d.samples = std::move(samples);
    if (d.samples.empty()) {
        return d;
    }
    double sum = 0;
    d.min = d.samples.front();
    d.max = d.samples.front();
    for (double x : d.samples) {
        sum += x;
        d.min = std::min(d.min, x);
        d.max = std::max(d.max, x);
    }
    d.mean = sum / static_cast<double>(d.samples.size());
    double sq = 0;
    for (double x : d.samples) {
        sq += (x - d.mean) * (x - d.mean);
    }
    d.std_dev = std::sqrt(sq / static_cast<double>(d.samples.size()));
    return d;
}

double median_of(std::vector<double> samples) {
    if (samples.empty()) {
        return 0.0;
    }
    std::size_t mid = samples.size() / 2;
    std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
    double hi = samples[mid];
    if (samples.size() % 2 == 1) {
        return hi;
    }
    double lo = *std::max_element(samples.begin(), samples.begin() + mid);
    return 0.5 * (lo + hi);
}

CpmDistributions cpm_distribution(const std::vector<Scenario>& scenarios,
                                  const ParameterRanges& ranges, int threads) {
    std::vector<double> diesel(scenarios.size());
    std::vector<double> electric(scenarios.size());
    detail::for_chunks(scenarios.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            CostPerMile c = cost_per_mile(scenarios[i], ranges);
            diesel[i] = c.diesel;
            electric[i] = c.electric;
        }
    });
    return {make_distribution(std::move(diesel)),
            make_distribution(std::move(electric))};
}

}  // namespace haulsim
