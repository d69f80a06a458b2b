#pragma once

#include <vector>

#include "haulsim/drivecycle.hpp"

namespace haulsim {

// Lower heating value of diesel expressed as pack-equivalent energy.
constexpr double kDieselKwhPerGallon = 37.95;

struct VehicleParams {
    double cd = 0.40;                  // drag coefficient
    double frontal_area_m2 = 10.0;
    double crr = 0.0075;               // rolling resistance coefficient
    double mass_kg = 36360.0;          // 80,000 lb gross combined weight
    double air_density_kgpm3 = 1.2;
    double gravity_mps2 = 9.81;
    double eta_battery_to_wheels = 0.88;
    double eta_brake = 0.65;           // share of braking energy recovered
    double platoon_energy_factor = 0.85;  // net energy multiplier when platooning
};

// Route grade exposure, folded into the steady-state road load: the truck
// spends grade_fraction of its distance climbing at the given grade.
struct RoadProfile {
    double grade = 0.0;           // rise over run, e.g. 0.01 for 1%
    double grade_fraction = 0.0;  // share of route on that grade, in [0, 1]
};

struct SimOptions {
    double pack_capacity_kwh = 1000.0;  // sets the regen charge ceiling (2C)
    bool platoon = false;
    double dt_s = 1.0;
};

struct EnergyTrace {
    std::vector<double> t_s;      // uniform grid the cycle was resampled onto
    std::vector<double> power_w;  // battery-side power, negative while charging
    double net_energy_kwh = 0;
    double distance_mi = 0;
    double energy_per_mile = 0;   // kWh/mi, platoon factor already applied
};

// Battery-side power needed to drive at speed v while accelerating at dvdt
// (dvdt >= 0). Exactly zero at v == 0.
double traction_power_w(const VehicleParams& veh, const RoadProfile& road,
                        double v_mps, double dvdt_mps2);

// Battery-side charge power recovered while braking (dvdt < 0). Negative,
// clamped so the pack never charges faster than 2C.
double regen_power_w(const VehicleParams& veh, double v_mps, double dvdt_mps2,
                     double pack_capacity_kwh);

EnergyTrace simulate_cycle(const DriveCycle& cycle, const VehicleParams& veh,
                           const RoadProfile& road, const SimOptions& opts = {});

// Tank-to-tank equivalent energy intensity of a diesel truck, kWh/mi.
double diesel_energy_per_mile(double mpg);

// Wh per ton-mile of freight moved.
double per_ton_mile(double kwh_per_mile, double freight_tons);

}  // namespace haulsim
