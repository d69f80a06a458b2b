#include "haulsim/config.hpp"

#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <string>

#include "haulsim/errors.hpp"

namespace haulsim {

RunConfig default_config() { return RunConfig{}; }

namespace {

std::string trimmed(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

using Setter = std::function<void(RunConfig&, double)>;

// One flat dotted key per tunable. Anything not listed here is a typo and
// gets rejected with its line number.
const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"vehicle.cd", [](RunConfig& c, double v) { c.vehicle.cd = v; }},
        {"vehicle.frontal_area_m2",
         [](RunConfig& c, double v) { c.vehicle.frontal_area_m2 = v; }},
        {"vehicle.crr", [](RunConfig& c, double v) { c.vehicle.crr = v; }},
        {"vehicle.mass_kg", [](RunConfig& c, double v) { c.vehicle.mass_kg = v; }},
        {"vehicle.air_density_kgpm3",
         [](RunConfig& c, double v) { c.vehicle.air_density_kgpm3 = v; }},
        {"vehicle.gravity_mps2",
         [](RunConfig& c, double v) { c.vehicle.gravity_mps2 = v; }},
        {"vehicle.eta_battery_to_wheels",
         [](RunConfig& c, double v) { c.vehicle.eta_battery_to_wheels = v; }},
        {"vehicle.eta_brake", [](RunConfig& c, double v) { c.vehicle.eta_brake = v; }},
        {"vehicle.platoon_energy_factor",
         [](RunConfig& c, double v) { c.vehicle.platoon_energy_factor = v; }},

        {"road.grade", [](RunConfig& c, double v) { c.road.grade = v; }},
        {"road.grade_fraction",
         [](RunConfig& c, double v) { c.road.grade_fraction = v; }},

        {"fade.base_loss_per_fec",
         [](RunConfig& c, double v) { c.fade.base_loss_per_fec = v; }},
        {"fade.depth_stress_exponent",
         [](RunConfig& c, double v) { c.fade.depth_stress_exponent = v; }},
        {"fade.charge_rate_penalty",
         [](RunConfig& c, double v) { c.fade.charge_rate_penalty = v; }},
        {"fade.grade_penalty",
         [](RunConfig& c, double v) { c.fade.grade_penalty = v; }},
        {"fade.calendar_loss_per_day",
         [](RunConfig& c, double v) { c.fade.calendar_loss_per_day = v; }},
        {"fade.eol_capacity_fraction",
         [](RunConfig& c, double v) { c.fade.eol_capacity_fraction = v; }},

        {"ranges.diesel_price_min",
         [](RunConfig& c, double v) { c.ranges.diesel_price.lo = v; }},
        {"ranges.diesel_price_max",
         [](RunConfig& c, double v) { c.ranges.diesel_price.hi = v; }},
        {"ranges.electricity_price_min",
         [](RunConfig& c, double v) { c.ranges.electricity_price.lo = v; }},
        {"ranges.electricity_price_max",
         [](RunConfig& c, double v) { c.ranges.electricity_price.hi = v; }},
        {"ranges.e_efficiency_min",
         [](RunConfig& c, double v) { c.ranges.e_efficiency.lo = v; }},
        {"ranges.e_efficiency_max",
         [](RunConfig& c, double v) { c.ranges.e_efficiency.hi = v; }},
        {"ranges.d_efficiency_min",
         [](RunConfig& c, double v) { c.ranges.d_efficiency.lo = v; }},
        {"ranges.d_efficiency_max",
         [](RunConfig& c, double v) { c.ranges.d_efficiency.hi = v; }},
        {"ranges.d_repairs_min",
         [](RunConfig& c, double v) { c.ranges.d_repairs.lo = v; }},
        {"ranges.d_repairs_max",
         [](RunConfig& c, double v) { c.ranges.d_repairs.hi = v; }},
        {"ranges.annual_mileage_min",
         [](RunConfig& c, double v) { c.ranges.annual_mileage.lo = v; }},
        {"ranges.annual_mileage_max",
         [](RunConfig& c, double v) { c.ranges.annual_mileage.hi = v; }},
        {"ranges.general_op_min",
         [](RunConfig& c, double v) { c.ranges.general_op.lo = v; }},
        {"ranges.general_op_max",
         [](RunConfig& c, double v) { c.ranges.general_op.hi = v; }},
        {"ranges.battery_price_min",
         [](RunConfig& c, double v) { c.ranges.battery_price.lo = v; }},
        {"ranges.battery_price_max",
         [](RunConfig& c, double v) { c.ranges.battery_price.hi = v; }},

        {"ranges.d_initial_price",
         [](RunConfig& c, double v) { c.ranges.d_initial_price = v; }},
        {"ranges.e_initial_price",
         [](RunConfig& c, double v) { c.ranges.e_initial_price = v; }},
        {"ranges.replacement_fraction",
         [](RunConfig& c, double v) { c.ranges.replacement_fraction = v; }},
        {"ranges.discount_rate",
         [](RunConfig& c, double v) { c.ranges.discount_rate = v; }},
        {"ranges.lifetime_miles",
         [](RunConfig& c, double v) { c.ranges.lifetime_miles = v; }},
        {"ranges.driving_days_per_year",
         [](RunConfig& c, double v) { c.ranges.driving_days_per_year = v; }},

        {"pack.range_mi", [](RunConfig& c, double v) { c.pack_range_mi = v; }},
        {"trace.max_miles", [](RunConfig& c, double v) { c.max_trace_miles = v; }},
        {"replacement.miles",
         [](RunConfig& c, double v) { c.replacement_miles_override = v; }},

        {"run.samples",
         [](RunConfig& c, double v) { c.samples = static_cast<std::size_t>(v); }},
        {"run.grid_points",
         [](RunConfig& c, double v) { c.grid_points = static_cast<int>(v); }},
        {"run.threads",
         [](RunConfig& c, double v) { c.threads = static_cast<int>(v); }},
    };
    return table;
}

double parse_value(const std::string& text, const std::string& name,
                   std::size_t line_no) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError(name + ":" + std::to_string(line_no) +
                         ": expected a number, got '" + text + "'");
    }
    if (used != text.size()) {
        throw ParseError(name + ":" + std::to_string(line_no) +
                         ": trailing characters after number in '" + text + "'");
    }
    return v;
}

void check_integral(double v, const std::string& key, const std::string& name,
                    std::size_t line_no) {
    if (v < 0 || v != static_cast<double>(static_cast<long long>(v))) {
        throw ParseError(name + ":" + std::to_string(line_no) + ": " + key +
                         " must be a nonnegative integer");
    }
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& name) {
    RunConfig cfg = default_config();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::string row = trimmed(line);
        if (row.empty()) {
            continue;
        }
        auto eq = row.find('=');
        if (eq == std::string::npos) {
            throw ParseError(name + ":" + std::to_string(line_no) +
                             ": expected 'key = value'");
        }
        std::string key = trimmed(row.substr(0, eq));
        std::string value = trimmed(row.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ParseError(name + ":" + std::to_string(line_no) +
                             ": expected 'key = value'");
        }
        if (key == "run.seed") {
            // stoull would happily wrap a negative literal
            if (value.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError(name + ":" + std::to_string(line_no) +
                                 ": run.seed must be an unsigned integer");
            }
            try {
                cfg.seed = std::stoull(value);
            } catch (const std::exception&) {
                throw ParseError(name + ":" + std::to_string(line_no) +
                                 ": run.seed must be an unsigned integer");
            }
            continue;
        }
        auto it = setters().find(key);
        if (it == setters().end()) {
            throw ConfigError(name + ":" + std::to_string(line_no) +
                              ": unknown key '" + key + "'");
        }
        double v = parse_value(value, name, line_no);
        if (key == "run.samples" || key == "run.grid_points" || key == "run.threads") {
            check_integral(v, key, name, line_no);
        }
        it->second(cfg, v);
    }
    validate_config(cfg);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open config file '" + path + "'");
    }
    return parse_config(in, path);
}

void validate_config(const RunConfig& cfg) {
    // Scenario ranges are checked with replacement_miles already resolved to
    // something positive, since 0 is the auto marker at this level.
    ParameterRanges probe = cfg.ranges;
    if (cfg.replacement_miles_override > 0) {
        probe.replacement_miles = cfg.replacement_miles_override;
    }
    probe.pack_range_mi = cfg.pack_range_mi;
    validate_ranges(probe);

    if (cfg.replacement_miles_override < 0) {
        throw ConfigError("replacement.miles must be 0 (auto) or positive");
    }
    if (cfg.pack_range_mi <= 0) {
        throw ConfigError("pack.range_mi must be positive");
    }
    if (cfg.max_trace_miles <= 0) {
        throw ConfigError("trace.max_miles must be positive");
    }
    if (cfg.samples == 0) {
        throw ConfigError("run.samples must be positive");
    }
    if (cfg.grid_points < 1) {
        throw ConfigError("run.grid_points must be at least 1");
    }
    if (cfg.threads < 1) {
        throw ConfigError("run.threads must be at least 1");
    }
}

ParameterRanges resolve_ranges(const RunConfig& cfg) {
    ParameterRanges r = cfg.ranges;
    r.pack_range_mi = cfg.pack_range_mi;
    if (cfg.replacement_miles_override > 0) {
        r.replacement_miles = cfg.replacement_miles_override;
        return r;
    }
    // Auto mode pegs replacement to the hardest reference duty: the mountain
    // route at 270 mi/day, the earliest pack to hit end of life.
    auto cases = run_reference_cases(cfg.vehicle, cfg.fade, cfg.pack_range_mi,
                                     cfg.max_trace_miles);
    for (const CaseResult& c : cases) {
        if (c.spec.label == "C") {
            if (!c.eol_miles) {
                throw ConfigError(
                    "mountain reference case never reaches end of life within "
                    "the trace horizon; set replacement.miles explicitly");
            }
            r.replacement_miles = *c.eol_miles;
            return r;
        }
    }
    throw Error("reference case C missing");  // unreachable
}

}  // namespace haulsim
