#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "haulsim/powertrain.hpp"

namespace haulsim {

struct PackSpec {
    double capacity_kwh = 0;  // nameplate capacity when new
    double range_mi = 0;      // rated range the pack was sized for
};

// Empirical capacity fade model. Cycling loss per duty day scales with the
// day's equivalent full cycles and is amplified by deep daily discharge,
// fast charging above 1C, and grade exposure; a small calendar term accrues
// regardless of use.
struct FadeParams {
    double base_loss_per_fec = 1.1e-4;    // capacity fraction lost per EFC
    double depth_stress_exponent = 1.0;   // extra weight on deep daily cycling
    double charge_rate_penalty = 0.15;    // per C-rate above 1C
    double grade_penalty = 21.0;          // per unit of grade*fraction*100
    double calendar_loss_per_day = 5e-6;
    double eol_capacity_fraction = 0.80;  // end-of-life threshold
};

struct LifeTrace {
    std::vector<double> miles;
    std::vector<double> capacity_fraction;
    double rated_range_mi = 0;  // available range = rated_range_mi * fraction
};

// One duty profile: which cycle shape the truck runs, whether it platoons,
// what terrain it sees, how fast it charges, and how far it goes per day.
struct CaseSpec {
    std::string label;
    CycleKind kind = CycleKind::cruise;
    bool platoon = false;
    RoadProfile road;
    double charge_c_rate = 1.0;
    double daily_miles = 270.0;
};

struct CaseResult {
    CaseSpec spec;
    double energy_per_mile = 0;       // kWh/mi on the stitched duty day
    double daily_energy_kwh = 0;
    PackSpec pack;
    LifeTrace trace;
    std::optional<double> eol_miles;  // empty if EOL not reached in the trace
};

// Sizes a pack so a new truck covers range_mi at the given intensity.
PackSpec size_pack(double range_mi, double kwh_per_mile);

// Walks the pack one duty day at a time until max_miles or until capacity
// drops below 70% (well past any useful end of life). Throws ConfigError if
// a single day would cost more than 5% capacity.
LifeTrace simulate_life(double daily_energy_kwh, double daily_miles,
                        const PackSpec& pack, const FadeParams& fade,
                        double charge_c_rate, const RoadProfile& road,
                        double max_miles = 1.2e6);

// First odometer reading at which capacity is below the threshold.
std::optional<double> miles_to_eol(const LifeTrace& trace, double threshold);

// The six duty profiles the headline numbers are quoted for: composite
// platooned / cruise / mountain custom, each at 270 and 400 mi/day.
std::vector<CaseSpec> reference_case_specs();

// Runs each reference case end to end: synthesize the cycle, stitch a duty
// day, size the pack off that day's intensity (two passes, since the regen
// ceiling depends on pack size), then trace fade to max_miles.
std::vector<CaseResult> run_reference_cases(const VehicleParams& veh,
                                            const FadeParams& fade,
                                            double range_mi = 500.0,
                                            double max_miles = 1.2e6);

// CSV "miles,capacity_fraction,available_range_mi", decimated to at most
// max_rows rows with the final point always kept.
void write_life_csv(std::ostream& out, const LifeTrace& trace,
                    std::size_t max_rows = 2000);

}  // namespace haulsim
