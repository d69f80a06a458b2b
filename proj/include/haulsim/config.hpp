#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "haulsim/battery.hpp"
#include "haulsim/economics.hpp"
#include "haulsim/powertrain.hpp"

namespace haulsim {

// Everything a run needs, assembled from defaults plus an optional config
// file of flat dotted key = value lines (# comments allowed). Unknown keys
// are hard errors so typos never silently fall back to defaults.
struct RunConfig {
    VehicleParams vehicle;
    RoadProfile road;
    FadeParams fade;
    ParameterRanges ranges;

    double pack_range_mi = 500.0;
    double max_trace_miles = 1.2e6;

    // 0 means "derive from the mountain reference case at run time";
    // any positive value pins the replacement odometer directly.
    double replacement_miles_override = 0.0;

    std::uint64_t seed = 42;
    std::size_t samples = 50000;
    int grid_points = 11;
    int threads = 1;
};

RunConfig default_config();
RunConfig load_config(const std::string& path);
RunConfig parse_config(std::istream& in, const std::string& name);

// Post-parse sanity checks (inverted ranges, nonsensical settings).
void validate_config(const RunConfig& cfg);

// Fills ranges.replacement_miles: the override when set, otherwise the
// simulated end of life of the mountain 270 mi/day reference case.
ParameterRanges resolve_ranges(const RunConfig& cfg);

}  // namespace haulsim
