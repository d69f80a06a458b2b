#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace haulsim {

constexpr double kMetersPerMile = 1609.344;

// Speed-vs-time trace. Times start at zero and strictly increase; speeds are
// nonnegative. Not necessarily uniformly sampled until resample() is applied.
struct DriveCycle {
    std::string name;
    std::vector<double> t_s;
    std::vector<double> v_mps;

    std::size_t size() const { return t_s.size(); }
    double duration_s() const { return t_s.empty() ? 0.0 : t_s.back(); }
};

struct CycleStats {
    double duration_s = 0;
    double distance_mi = 0;
    double mean_speed_mps = 0;   // distance / duration
    double max_speed_mps = 0;
    double max_accel_mps2 = 0;   // largest |dv/dt| between adjacent samples
    double stop_fraction = 0;    // share of samples at rest
    std::size_t samples = 0;
};

// Built-in cycle shapes. cruise is a single ramp to highway speed held for
// the rest of the hour. composite chains accelerate/hold/brake/idle blocks
// with frequent stops; custom does the same with long holds and rare stops.
enum class CycleKind { cruise, composite, custom };

CycleKind cycle_kind_from_name(const std::string& name);

struct SynthParams {
    double target_speed_mps = 0;
    double duration_s = 0;
    double stop_fraction = 0;   // share of time at rest (ignored for cruise)
    double hold_s = 0;          // cruise portion of each block (ignored for cruise)
    double accel_mps2 = 0;
    double decel_mps2 = 0;
};

// Tuned generator settings for each built-in shape.
SynthParams default_synth_params(CycleKind kind);

// Throws ValidationError unless the cycle is well formed: at least two
// samples, t[0] == 0, strictly increasing times, finite nonnegative speeds.
void validate_cycle(const DriveCycle& cycle);

// CSV with header "t_s,v_mps". Parse errors carry the line number.
DriveCycle parse_cycle_csv(std::istream& in, const std::string& name);
DriveCycle load_cycle(const std::string& path);
void write_cycle_csv(std::ostream& out, const DriveCycle& cycle);

DriveCycle synth_cycle(CycleKind kind, const SynthParams& params);

// Linear interpolation onto a uniform grid 0, dt, 2dt, ... <= duration.
DriveCycle resample(const DriveCycle& cycle, double dt_s);

// Repeats the cycle, splicing repetitions with a 30 s coast to rest, until
// the cumulative distance first reaches daily_distance_mi, and truncates
// there. The result is what one duty day looks like on this cycle.
DriveCycle stitch_daily(const DriveCycle& cycle, double daily_distance_mi,
                        double splice_s = 30.0);

CycleStats cycle_stats(const DriveCycle& cycle);

}  // namespace haulsim
