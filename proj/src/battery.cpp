#include "haulsim/battery.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "haulsim/csvio.hpp"
#include "haulsim/errors.hpp"

namespace haulsim {

PackSpec size_pack(double range_mi, double kwh_per_mile) {
    if (range_mi <= 0) {
        throw ArgumentError("pack range must be positive");
    }
    if (kwh_per_mile <= 0) {
        throw ArgumentError("energy intensity must be positive");
    }
    return PackSpec{range_mi * kwh_per_mile, range_mi};
}

LifeTrace simulate_life(double daily_energy_kwh, double daily_miles,
                        const PackSpec& pack, const FadeParams& fade,
                        double charge_c_rate, const RoadProfile& road,
                        double max_miles) {
    if (daily_energy_kwh <= 0 || daily_miles <= 0) {
        throw ArgumentError("daily energy and distance must be positive");
    }
    if (pack.capacity_kwh <= 0) {
        throw ArgumentError("pack capacity must be positive");
    }
    if (charge_c_rate <= 0) {
        throw ArgumentError("charge rate must be positive");
    }
    if (max_miles <= 0) {
        throw ArgumentError("trace horizon must be positive");
    }
    if (fade.base_loss_per_fec < 0 || fade.calendar_loss_per_day < 0 ||
        fade.charge_rate_penalty < 0 || fade.grade_penalty < 0 ||
        fade.depth_stress_exponent < 0) {
        throw ConfigError("fade parameters must be nonnegative");
    }

    double rate_factor = 1.0 + fade.charge_rate_penalty * std::max(0.0, charge_c_rate - 1.0);
    double grade_factor =
        1.0 + fade.grade_penalty * road.grade_fraction * road.grade * 100.0;

    LifeTrace trace;
    trace.rated_range_mi = pack.range_mi;
    double cf = 1.0;
    double miles = 0.0;
    trace.miles.push_back(0.0);
    trace.capacity_fraction.push_back(1.0);
    // Walk duty days. The faded pack works harder every day (same energy out
    // of less capacity), so loss accelerates as cf drops. Stop once capacity
    // is uninteresting for any duty (70%) or the horizon is reached.
    while (miles < max_miles && cf >= 0.70) {
        double fec = daily_energy_kwh / (pack.capacity_kwh * cf);
        double loss = fade.base_loss_per_fec * fec *
                          std::pow(fec, fade.depth_stress_exponent) * rate_factor *
                          grade_factor +
                      fade.calendar_loss_per_day;
        if (loss > 0.05) {
            throw ConfigError("implausible fade: losing " + format_double(loss * 100) +
                              "% capacity in one day; check pack size and fade settings");
        }
        cf -= loss;
        miles += daily_miles;
        trace.miles.push_back(miles);
        trace.capacity_fraction.push_back(cf);
    }
    return trace;
}

std::optional<double> miles_to_eol(const LifeTrace& trace, double threshold) {
    for (std::size_t i = 0; i < trace.miles.size(); ++i) {
        if (trace.capacity_fraction[i] < threshold) {
            return trace.miles[i];
        }
    }
    return std::nullopt;
}

std::vector<CaseSpec> reference_case_specs() {
    RoadProfile flat;
    RoadProfile mountain{0.01, 0.1};
    return {
        {"A", CycleKind::composite, true, flat, 1.0, 270.0},
        {"B", CycleKind::cruise, false, flat, 2.0, 270.0},
        {"C", CycleKind::custom, false, mountain, 3.0, 270.0},
        {"D", CycleKind::composite, true, flat, 1.0, 400.0},
        {"E", CycleKind::cruise, false, flat, 2.0, 400.0},
        {"F", CycleKind::custom, false, mountain, 3.0, 400.0},
    };
}

std::vector<CaseResult> run_reference_cases(const VehicleParams& veh,
                                            const FadeParams& fade,
                                            double range_mi, double max_miles) {
    std::vector<CaseResult> results;
    for (const CaseSpec& spec : reference_case_specs()) {
        DriveCycle cycle = synth_cycle(spec.kind, default_synth_params(spec.kind));
        DriveCycle day = stitch_daily(cycle, spec.daily_miles);

        // Pack size depends on measured intensity, but the regen ceiling in
        // the simulation depends on pack size. Two passes settle it: a
        // provisional sizing run, then the real one with the sized pack.
        SimOptions provisional;
        provisional.platoon = spec.platoon;
        EnergyTrace first = simulate_cycle(day, veh, spec.road, provisional);
        PackSpec pack = size_pack(range_mi, first.energy_per_mile);

        SimOptions sized = provisional;
        sized.pack_capacity_kwh = pack.capacity_kwh;
        EnergyTrace second = simulate_cycle(day, veh, spec.road, sized);

        CaseResult r;
        r.spec = spec;
        r.energy_per_mile = second.energy_per_mile;
        r.daily_energy_kwh = second.net_energy_kwh;
        r.pack = pack;
        r.trace = simulate_life(second.net_energy_kwh, second.distance_mi, pack,
                                fade, spec.charge_c_rate, spec.road, max_miles);
        r.eol_miles = miles_to_eol(r.trace, fade.eol_capacity_fraction);
        results.push_back(std::move(r));
    }
    return results;
}

void write_life_csv(std::ostream& out, const LifeTrace& trace,
                    std::size_t max_rows) {
    out << "miles,capacity_fraction,available_range_mi\n";
    std::size_t n = trace.miles.size();
    if (n == 0 || max_rows == 0) {
        return;
    }
    std::size_t stride = (n + max_rows - 1) / max_rows;
    auto emit = [&](std::size_t i) {
        out << format_double(trace.miles[i]) << ','
            << format_double(trace.capacity_fraction[i]) << ','
            << format_double(trace.rated_range_mi * trace.capacity_fraction[i])
            << '\n';
    };
    std::size_t last_emitted = 0;
    for (std::size_t i = 0; i < n; i += stride) {
        emit(i);
        last_emitted = i;
    }
    if (last_emitted != n - 1) {
        emit(n - 1);
    }
}

}  // namespace haulsim
