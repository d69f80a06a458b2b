#include "haulsim/powertrain.hpp"

#include <algorithm>
#include <cmath>

#include "haulsim/errors.hpp"
#include "haulsim/kernels.hpp"

namespace haulsim {

namespace {

void check_vehicle(const VehicleParams& v) {
    if (v.mass_kg <= 0 || v.frontal_area_m2 <= 0 || v.air_density_kgpm3 <= 0 ||
        v.gravity_mps2 <= 0 || v.cd <= 0 || v.crr < 0) {
        throw ValidationError("vehicle parameters must be positive");
    }
    if (v.eta_battery_to_wheels <= 0 || v.eta_battery_to_wheels > 1 ||
        v.eta_brake < 0 || v.eta_brake > 1) {
        throw ValidationError("drivetrain efficiencies must lie in (0, 1]");
    }
    if (v.platoon_energy_factor <= 0 || v.platoon_energy_factor > 1) {
        throw ValidationError("platoon energy factor must lie in (0, 1]");
    }
}

void check_road(const RoadProfile& r) {
    if (r.grade_fraction < 0 || r.grade_fraction > 1) {
        throw ValidationError("grade fraction must lie in [0, 1]");
    }
    if (std::abs(r.grade) > 0.3) {
        throw ValidationError("grade beyond +-30% is not a road");
    }
}

kernels::PowerCoeffs fold_coeffs(const VehicleParams& veh, const RoadProfile& road,
                                 double pack_capacity_kwh) {
    kernels::PowerCoeffs c;
    double eta = veh.eta_battery_to_wheels;
    c.aero = 0.5 * veh.air_density_kgpm3 * veh.cd * veh.frontal_area_m2 / eta;
    c.roll = veh.crr * veh.mass_kg * veh.gravity_mps2 / eta;
    c.grade = road.grade_fraction * veh.mass_kg * veh.gravity_mps2 * road.grade / eta;
    c.inertia = veh.mass_kg / eta;
    c.regen = veh.mass_kg * eta * veh.eta_brake;
    c.regen_floor_w = -2.0 * pack_capacity_kwh * 1000.0;  // 2C charge ceiling
    return c;
}

}  // namespace

double traction_power_w(const VehicleParams& veh, const RoadProfile& road,
                        double v_mps, double dvdt_mps2) {
    check_vehicle(veh);
    check_road(road);
    if (v_mps < 0) {
        throw ArgumentError("speed must be nonnegative");
    }
    if (dvdt_mps2 < 0) {
        throw ArgumentError("traction_power_w needs dvdt >= 0; braking is regen_power_w");
    }
    kernels::PowerCoeffs c = fold_coeffs(veh, road, 0.0);
    return c.aero * v_mps * v_mps * v_mps + (c.roll + c.grade) * v_mps +
           c.inertia * v_mps * dvdt_mps2;
}

double regen_power_w(const VehicleParams& veh, double v_mps, double dvdt_mps2,
                     double pack_capacity_kwh) {
    check_vehicle(veh);
    if (v_mps < 0) {
        throw ArgumentError("speed must be nonnegative");
    }
    if (dvdt_mps2 >= 0) {
        throw ArgumentError("regen_power_w needs dvdt < 0");
    }
    if (pack_capacity_kwh <= 0) {
        throw ArgumentError("pack capacity must be positive");
    }
    double p = veh.mass_kg * v_mps * dvdt_mps2 * veh.eta_battery_to_wheels * veh.eta_brake;
    return std::max(p, -2.0 * pack_capacity_kwh * 1000.0);
}

EnergyTrace simulate_cycle(const DriveCycle& cycle, const VehicleParams& veh,
                           const RoadProfile& road, const SimOptions& opts) {
    check_vehicle(veh);
    check_road(road);
    if (opts.pack_capacity_kwh <= 0) {
        throw ArgumentError("pack capacity must be positive");
    }
    if (opts.dt_s <= 0) {
        throw ArgumentError("simulation step must be positive");
    }

    DriveCycle uni = resample(cycle, opts.dt_s);
    std::size_t n = uni.size();
    const std::vector<double>& v = uni.v_mps;

    // centered finite difference, one-sided at the ends
    std::vector<double> dvdt(n);
    double dt = opts.dt_s;
    dvdt[0] = (v[1] - v[0]) / dt;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        dvdt[i] = (v[i + 1] - v[i - 1]) / (2.0 * dt);
    }
    dvdt[n - 1] = (v[n - 1] - v[n - 2]) / dt;

    EnergyTrace trace;
    trace.t_s = uni.t_s;
    trace.power_w.resize(n);
    kernels::PowerCoeffs c = fold_coeffs(veh, road, opts.pack_capacity_kwh);
    kernels::power_series(v.data(), dvdt.data(), n, c, trace.power_w.data());

    double energy_ws = kernels::trapezoid(trace.power_w.data(), n, dt);
    trace.net_energy_kwh = energy_ws / 3.6e6;
    if (opts.platoon) {
        trace.net_energy_kwh *= veh.platoon_energy_factor;
    }
    double distance_m = kernels::trapezoid(v.data(), n, dt);
    if (distance_m <= 0) {
        throw ValidationError(cycle.name + ": cycle covers no distance");
    }
    trace.distance_mi = distance_m / kMetersPerMile;
    trace.energy_per_mile = trace.net_energy_kwh / trace.distance_mi;
    return trace;
}

double diesel_energy_per_mile(double mpg) {
    if (mpg <= 0) {
        throw ArgumentError("fuel economy must be positive");
    }
    return kDieselKwhPerGallon / mpg;
}

double per_ton_mile(double kwh_per_mile, double freight_tons) {
    if (freight_tons <= 0) {
        throw ArgumentError("freight tonnage must be positive");
    }
    return kwh_per_mile * 1000.0 / freight_tons;
}

}  // namespace haulsim
