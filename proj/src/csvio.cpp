#include "haulsim/csvio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <vector>

#include "haulsim/errors.hpp"

namespace haulsim {

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_energy_trace_csv(std::ostream& out, const EnergyTrace& trace) {
    out << "t_s,power_w\n";
    for (std::size_t i = 0; i < trace.t_s.size(); ++i) {
        out << format_double(trace.t_s[i]) << ',' << format_double(trace.power_w[i])
            << '\n';
    }
}

namespace {

void write_scenario_fields(std::ostream& out, const Scenario& s) {
    out << format_double(s.diesel_price) << ',' << format_double(s.electricity_price)
        << ',' << format_double(s.e_efficiency) << ','
        << format_double(s.d_efficiency_mpg) << ',' << format_double(s.d_repairs)
        << ',' << format_double(s.annual_mileage) << ','
        << format_double(s.general_op) << ',' << format_double(s.battery_price)
        << ',' << (s.needs_replacement ? 1 : 0) << ','
        << format_double(s.replacement_year);
}

constexpr const char* kScenarioHeader =
    "diesel_price_usd_gal,electricity_price_usd_kwh,e_efficiency_kwh_mi,"
    "d_efficiency_mpg,d_repairs_usd_mi,annual_mileage_mi,general_op_usd_mi,"
    "battery_price_usd_kwh,needs_replacement,replacement_year";

}  // namespace

void write_scenarios_csv(std::ostream& out,
                         const std::vector<Scenario>& scenarios,
                         const ParameterRanges& ranges) {
    out << kScenarioHeader << ",cpm_diesel,cpm_electric\n";
    for (const Scenario& s : scenarios) {
        CostPerMile c = cost_per_mile(s, ranges);
        write_scenario_fields(out, s);
        out << ',' << format_double(c.diesel) << ',' << format_double(c.electric)
            << '\n';
    }
}

void write_payback_csv(std::ostream& out,
                       const std::vector<Scenario>& scenarios,
                       const ParameterRanges& ranges) {
    out << kScenarioHeader << ",broke_even,payback_yr,odometer_mi\n";
    for (const Scenario& s : scenarios) {
        PaybackResult r = payback_period(s, ranges);
        write_scenario_fields(out, s);
        out << ',' << (r.broke_even ? 1 : 0) << ','
            << format_double(r.broke_even ? r.payback_yr : -1.0) << ','
            << format_double(r.broke_even ? r.odometer_mi : -1.0) << '\n';
    }
}

void write_sensitivity_csv(std::ostream& out,
                           const std::vector<SensitivityPoint>& points) {
    out << "variable,pinned_value,mean_payback_yr,std_payback_yr,frac_no_breakeven\n";
    for (const SensitivityPoint& p : points) {
        out << p.variable << ',' << format_double(p.pinned_value) << ','
            << format_double(p.mean_payback_yr) << ','
            << format_double(p.std_payback_yr) << ','
            << format_double(p.frac_no_breakeven) << '\n';
    }
}

void write_vignette_csv(std::ostream& out,
                        const std::vector<VignettePoint>& points) {
    out << "cd,e_efficiency_kwh_mi,pack_kwh,mean_payback_yr,median_payback_yr,"
           "frac_no_breakeven\n";
    for (const VignettePoint& p : points) {
        out << format_double(p.cd) << ',' << format_double(p.e_efficiency_kwh_mi)
            << ',' << format_double(p.pack_kwh) << ','
            << format_double(p.mean_payback_yr) << ','
            << format_double(p.median_payback_yr) << ','
            << format_double(p.frac_no_breakeven) << '\n';
    }
}

void write_histogram_csv(std::ostream& out, const Distribution& dist, int bins) {
    if (bins < 1) {
        throw ArgumentError("histogram needs at least one bin");
    }
    out << "bin_lo,bin_hi,count\n";
    if (dist.samples.empty()) {
        return;
    }
    double lo = dist.min;
    double hi = dist.max;
    double width = (hi - lo) / bins;
    if (width <= 0) {
        // all samples identical: one degenerate bin
        out << format_double(lo) << ',' << format_double(hi) << ','
            << dist.samples.size() << '\n';
        return;
    }
    std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
    for (double x : dist.samples) {
        auto idx = static_cast<long>((x - lo) / width);
        idx = std::max(0L, std::min<long>(idx, bins - 1));
        ++counts[static_cast<std::size_t>(idx)];
    }
    for (int b = 0; b < bins; ++b) {
        out << format_double(lo + b * width) << ','
            << format_double(lo + (b + 1) * width) << ',' << counts[b] << '\n';
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ArgumentError("cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out) {
        throw ArgumentError("failed writing '" + path + "'");
    }
}

}  // namespace haulsim
