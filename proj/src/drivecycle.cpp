#include "haulsim/drivecycle.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "haulsim/csvio.hpp"
#include "haulsim/errors.hpp"

namespace haulsim {

namespace {

std::string trimmed(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) {
        return "";
    }
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& text, const std::string& name,
                    std::size_t line_no) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParseError(name + ":" + std::to_string(line_no) +
                         ": expected a number, got '" + text + "'");
    }
    if (used != text.size()) {
        throw ParseError(name + ":" + std::to_string(line_no) +
                         ": trailing characters after number in '" + text + "'");
    }
    return value;
}

// Distance in meters over a possibly nonuniform grid.
double trapezoid_distance_m(const DriveCycle& c) {
    double acc = 0.0;
    for (std::size_t i = 1; i < c.size(); ++i) {
        acc += 0.5 * (c.v_mps[i - 1] + c.v_mps[i]) * (c.t_s[i] - c.t_s[i - 1]);
    }
    return acc;
}

}  // namespace

CycleKind cycle_kind_from_name(const std::string& name) {
    if (name == "cruise") return CycleKind::cruise;
    if (name == "composite") return CycleKind::composite;
    if (name == "custom") return CycleKind::custom;
    throw ArgumentError("unknown cycle kind '" + name +
                        "' (expected cruise, composite, or custom)");
}

SynthParams default_synth_params(CycleKind kind) {
    SynthParams p;
    switch (kind) {
        case CycleKind::cruise:
            // one ramp to highway speed, then steady cruising
            p.target_speed_mps = 21.7;
            p.duration_s = 3600.0;
            p.stop_fraction = 0.0;
            p.hold_s = 0.0;
            p.accel_mps2 = 0.4;
            p.decel_mps2 = 0.0;
            break;
        case CycleKind::composite:
            // regional haul: short cruise segments broken up by stops
            p.target_speed_mps = 24.6;
            p.duration_s = 7200.0;
            p.stop_fraction = 0.20;
            p.hold_s = 240.0;
            p.accel_mps2 = 0.5;
            p.decel_mps2 = 0.6;
            break;
        case CycleKind::custom:
            // mountain route: long holds, few stops
            p.target_speed_mps = 24.0;
            p.duration_s = 7200.0;
            p.stop_fraction = 0.08;
            p.hold_s = 720.0;
            p.accel_mps2 = 0.5;
            p.decel_mps2 = 0.6;
            break;
    }
    return p;
}

void validate_cycle(const DriveCycle& cycle) {
    const std::string label = cycle.name.empty() ? "cycle" : cycle.name;
    if (cycle.t_s.size() != cycle.v_mps.size()) {
        throw ValidationError(label + ": time and speed columns differ in length");
    }
    if (cycle.size() < 2) {
        throw ValidationError(label + ": needs at least two samples, has " +
                              std::to_string(cycle.size()));
    }
    if (cycle.t_s.front() != 0.0) {
        throw ValidationError(label + ": time must start at 0, starts at " +
                              format_double(cycle.t_s.front()));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!std::isfinite(cycle.t_s[i]) || !std::isfinite(cycle.v_mps[i])) {
            throw ValidationError(label + ": non-finite value at sample " +
                                  std::to_string(i));
        }
        if (i > 0 && cycle.t_s[i] <= cycle.t_s[i - 1]) {
            throw ValidationError(label + ": time not strictly increasing at sample " +
                                  std::to_string(i));
        }
        if (cycle.v_mps[i] < 0.0) {
            throw ValidationError(label + ": negative speed at sample " +
                                  std::to_string(i));
        }
    }
}

DriveCycle parse_cycle_csv(std::istream& in, const std::string& name) {
    DriveCycle cycle;
    cycle.name = name;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string row = trimmed(line);
        if (row.empty() || row[0] == '#') {
            continue;
        }
        if (!saw_header) {
            if (row != "t_s,v_mps") {
                throw ParseError(name + ":" + std::to_string(line_no) +
                                 ": expected header 't_s,v_mps', got '" + row + "'");
            }
            saw_header = true;
            continue;
        }
        auto comma = row.find(',');
        if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos) {
            throw ParseError(name + ":" + std::to_string(line_no) +
                             ": expected exactly two comma separated fields");
        }
        cycle.t_s.push_back(parse_number(trimmed(row.substr(0, comma)), name, line_no));
        cycle.v_mps.push_back(parse_number(trimmed(row.substr(comma + 1)), name, line_no));
    }
    if (!saw_header) {
        throw ParseError(name + ": empty file, expected header 't_s,v_mps'");
    }
    validate_cycle(cycle);
    return cycle;
}

DriveCycle load_cycle(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open cycle file '" + path + "'");
    }
    return parse_cycle_csv(in, path);
}

void write_cycle_csv(std::ostream& out, const DriveCycle& cycle) {
    out << "t_s,v_mps\n";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        out << format_double(cycle.t_s[i]) << ',' << format_double(cycle.v_mps[i])
            << '\n';
    }
}

namespace {

DriveCycle synth_cruise(const SynthParams& p) {
    DriveCycle c;
    c.name = "cruise";
    auto n = static_cast<std::size_t>(p.duration_s);
    c.t_s.reserve(n + 1);
    c.v_mps.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        double t = static_cast<double>(i);
        c.t_s.push_back(t);
        c.v_mps.push_back(std::min(p.target_speed_mps, p.accel_mps2 * t));
    }
    return c;
}

// Chains accelerate / hold / brake / idle blocks at 1 Hz until the requested
// duration is covered. Idle length is chosen so idle time is stop_fraction of
// the block.
DriveCycle synth_blocks(const SynthParams& p, const std::string& name) {
    if (p.decel_mps2 <= 0.0) {
        throw ArgumentError(name + " generator needs a positive decel rate");
    }
    double ta = p.target_speed_mps / p.accel_mps2;
    double td = p.target_speed_mps / p.decel_mps2;
    double moving_s = ta + p.hold_s + td;
    double idle_s = p.stop_fraction > 0.0
                        ? p.stop_fraction * moving_s / (1.0 - p.stop_fraction)
                        : 0.0;
    auto accel_n = static_cast<std::size_t>(std::ceil(ta));
    auto hold_n = static_cast<std::size_t>(p.hold_s);
    auto decel_n = static_cast<std::size_t>(std::ceil(td));
    auto idle_n = static_cast<std::size_t>(std::llround(idle_s));

    DriveCycle c;
    c.name = name;
    c.t_s.push_back(0.0);
    c.v_mps.push_back(0.0);
    double t = 0.0;
    auto push = [&](double v) {
        t += 1.0;
        c.t_s.push_back(t);
        c.v_mps.push_back(v);
    };
    while (t < p.duration_s) {
        for (std::size_t k = 1; k <= accel_n; ++k) {
            push(std::min(p.target_speed_mps, p.accel_mps2 * static_cast<double>(k)));
        }
        for (std::size_t k = 0; k < hold_n; ++k) {
            push(p.target_speed_mps);
        }
        for (std::size_t k = 1; k <= decel_n; ++k) {
            push(std::max(0.0, p.target_speed_mps - p.decel_mps2 * static_cast<double>(k)));
        }
        for (std::size_t k = 0; k < idle_n; ++k) {
            push(0.0);
        }
    }
    return c;
}

}  // namespace

DriveCycle synth_cycle(CycleKind kind, const SynthParams& p) {
    if (p.target_speed_mps <= 0.0) {
        throw ArgumentError("cycle target speed must be positive");
    }
    if (p.duration_s <= 0.0) {
        throw ArgumentError("cycle duration must be positive");
    }
    if (p.accel_mps2 <= 0.0) {
        throw ArgumentError("cycle accel rate must be positive");
    }
    if (p.stop_fraction < 0.0 || p.stop_fraction >= 0.9) {
        throw ArgumentError("cycle stop fraction must be in [0, 0.9)");
    }
    DriveCycle c;
    switch (kind) {
        case CycleKind::cruise:
            c = synth_cruise(p);
            break;
        case CycleKind::composite:
            c = synth_blocks(p, "composite");
            break;
        case CycleKind::custom:
            c = synth_blocks(p, "custom");
            break;
    }
    validate_cycle(c);
    return c;
}

DriveCycle resample(const DriveCycle& cycle, double dt_s) {
    validate_cycle(cycle);
    if (dt_s <= 0.0) {
        throw ArgumentError("resample step must be positive");
    }
    if (dt_s > cycle.duration_s()) {
        throw ArgumentError("resample step exceeds cycle duration");
    }
    auto steps = static_cast<std::size_t>(std::floor(cycle.duration_s() / dt_s));
    DriveCycle out;
    out.name = cycle.name;
    out.t_s.reserve(steps + 1);
    out.v_mps.reserve(steps + 1);
    std::size_t seg = 0;
    for (std::size_t i = 0; i <= steps; ++i) {
        double t = static_cast<double>(i) * dt_s;
        while (seg + 2 < cycle.size() && cycle.t_s[seg + 1] < t) {
            ++seg;
        }
        double t0 = cycle.t_s[seg];
        double t1 = cycle.t_s[seg + 1];
        double w = std::clamp((t - t0) / (t1 - t0), 0.0, 1.0);
        out.t_s.push_back(t);
        out.v_mps.push_back(cycle.v_mps[seg] + w * (cycle.v_mps[seg + 1] - cycle.v_mps[seg]));
    }
    return out;
}

DriveCycle stitch_daily(const DriveCycle& cycle, double daily_distance_mi,
                        double splice_s) {
    validate_cycle(cycle);
    if (daily_distance_mi <= 0.0) {
        throw ArgumentError("daily distance must be positive");
    }
    if (splice_s <= 0.0) {
        throw ArgumentError("splice duration must be positive");
    }
    double cycle_mi = trapezoid_distance_m(cycle) / kMetersPerMile;
    if (cycle_mi <= 0.0) {
        throw ValidationError(cycle.name + ": cycle covers no distance, cannot stitch");
    }

    DriveCycle day;
    day.name = cycle.name + "-day";
    double cum_mi = 0.0;
    auto push = [&](double t, double v) -> bool {
        if (!day.t_s.empty()) {
            cum_mi += 0.5 * (day.v_mps.back() + v) * (t - day.t_s.back()) / kMetersPerMile;
        }
        day.t_s.push_back(t);
        day.v_mps.push_back(v);
        return cum_mi >= daily_distance_mi;
    };

    // First repetition, then splice-plus-repetition until the odometer target
    // is reached; stop at the first sample that reaches it.
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (push(cycle.t_s[i], cycle.v_mps[i])) {
            return day;
        }
    }
    for (;;) {
        double splice_t = day.t_s.back() + splice_s;
        if (push(splice_t, 0.0)) {
            return day;
        }
        double offset = splice_t + 1.0;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (push(cycle.t_s[i] + offset, cycle.v_mps[i])) {
                return day;
            }
        }
    }
}

CycleStats cycle_stats(const DriveCycle& cycle) {
    validate_cycle(cycle);
    CycleStats s;
    s.samples = cycle.size();
    s.duration_s = cycle.duration_s();
    s.distance_mi = trapezoid_distance_m(cycle) / kMetersPerMile;
    s.mean_speed_mps = s.distance_mi * kMetersPerMile / s.duration_s;
    s.max_speed_mps = *std::max_element(cycle.v_mps.begin(), cycle.v_mps.end());
    std::size_t stopped = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle.v_mps[i] <= 1e-9) {
            ++stopped;
        }
        if (i > 0) {
            double a = std::abs((cycle.v_mps[i] - cycle.v_mps[i - 1]) /
                                (cycle.t_s[i] - cycle.t_s[i - 1]));
            s.max_accel_mps2 = std::max(s.max_accel_mps2, a);
        }
    }
    s.stop_fraction = static_cast<double>(stopped) / static_cast<double>(s.samples);
    return s;
}

}  // namespace haulsim
