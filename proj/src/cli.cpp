#include "haulsim/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "haulsim/battery.hpp"
#include "haulsim/config.hpp"
#include "haulsim/csvio.hpp"
#include "haulsim/economics.hpp"
#include "haulsim/errors.hpp"
#include "haulsim/kernels.hpp"
#include "haulsim/payback.hpp"
#include "haulsim/powertrain.hpp"

namespace haulsim {

namespace {

constexpr const char* kVersion = "haulsim 1.0.0";

std::string fmt(double x, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, x);
    return buf;
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw ArgumentError("bad number '" + item + "' in value list");
        }
        if (used != item.size()) {
            throw ArgumentError("bad number '" + item + "' in value list");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ArgumentError("value list is empty");
    }
    return out;
}

// Collects everything a subcommand wrote so the manifest names each output.
struct RunOutputs {
    std::string out_dir;
    std::vector<std::string> files;

    std::string save(const std::string& name, const std::string& contents) {
        std::filesystem::create_directories(out_dir);
        std::string path = (std::filesystem::path(out_dir) / name).string();
        write_file(path, contents);
        files.push_back(path);
        std::cout << "wrote: " << path << "\n";
        return path;
    }
};

void write_manifest(RunOutputs& outputs, const std::string& command,
                    const RunConfig& cfg) {
    std::ostringstream m;
    m << kVersion << "\n"
      << "command: " << command << "\n"
      << "seed: " << cfg.seed << "\n"
      << "samples: " << cfg.samples << "\n"
      << "grid_points: " << cfg.grid_points << "\n"
      << "threads: " << cfg.threads << "\n"
      << "simd: " << kernels::level_name(kernels::active_level()) << "\n";
    for (const std::string& f : outputs.files) {
        m << "output: " << f << "\n";
    }
    outputs.save("run_manifest.txt", m.str());
}

double capacity_at(const LifeTrace& trace, double miles) {
    // linear interpolation on the day grid; clamps at the trace ends
    if (miles <= trace.miles.front()) {
        return trace.capacity_fraction.front();
    }
    if (miles >= trace.miles.back()) {
        return trace.capacity_fraction.back();
    }
    std::size_t i = 1;
    while (trace.miles[i] < miles) {
        ++i;
    }
    double w = (miles - trace.miles[i - 1]) / (trace.miles[i] - trace.miles[i - 1]);
    return trace.capacity_fraction[i - 1] +
           w * (trace.capacity_fraction[i] - trace.capacity_fraction[i - 1]);
}

struct GlobalArgs {
    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    int grid_points = 0;
    int threads = 0;
    bool emit_plotdata = false;
};

RunConfig build_config(const CLI::App& app, const GlobalArgs& args) {
    RunConfig cfg = args.config_path.empty() ? default_config()
                                             : load_config(args.config_path);
    if (app.count("--seed") > 0) {
        cfg.seed = args.seed;
    }
    if (app.count("--samples") > 0) {
        cfg.samples = args.samples;
    }
    if (app.count("--grid-points") > 0) {
        cfg.grid_points = args.grid_points;
    }
    if (app.count("--threads") > 0) {
        cfg.threads = args.threads;
    }
    validate_config(cfg);
    return cfg;
}

int cmd_energy(const RunConfig& cfg, RunOutputs& outputs,
               const std::string& cycle_path, const std::string& cycle_kind,
               bool platoon, double pack_kwh, double daily_miles,
               double freight_tons) {
    DriveCycle cycle;
    if (!cycle_path.empty()) {
        cycle = load_cycle(cycle_path);
    } else {
        CycleKind kind = cycle_kind_from_name(cycle_kind);
        cycle = synth_cycle(kind, default_synth_params(kind));
    }
    if (daily_miles > 0) {
        cycle = stitch_daily(cycle, daily_miles);
    }

    SimOptions opts;
    opts.pack_capacity_kwh = pack_kwh;
    opts.platoon = platoon;
    EnergyTrace trace = simulate_cycle(cycle, cfg.vehicle, cfg.road, opts);
    CycleStats stats = cycle_stats(cycle);

    std::cout << "cycle: " << cycle.name << " (" << fmt(stats.duration_s, 0)
              << " s, " << fmt(stats.distance_mi, 2) << " mi, " << stats.samples
              << " samples, stop fraction " << fmt(stats.stop_fraction, 3) << ")\n"
              << "net energy: " << fmt(trace.net_energy_kwh, 2) << " kWh\n"
              << "energy intensity: " << fmt(trace.energy_per_mile, 4)
              << " kWh/mi\n"
              << "per ton-mile (" << fmt(freight_tons, 0)
              << " t): " << fmt(per_ton_mile(trace.energy_per_mile, freight_tons), 2)
              << " Wh\n";

    std::ostringstream cycle_csv;
    write_cycle_csv(cycle_csv, cycle);
    outputs.save("cycle.csv", cycle_csv.str());
    std::ostringstream trace_csv;
    write_energy_trace_csv(trace_csv, trace);
    outputs.save("energy_trace.csv", trace_csv.str());
    return 0;
}

int cmd_cyclelife(const RunConfig& cfg, RunOutputs& outputs, bool fade_zero) {
    FadeParams fade = cfg.fade;
    if (fade_zero) {
        fade.base_loss_per_fec = 0;
        fade.charge_rate_penalty = 0;
        fade.grade_penalty = 0;
        fade.calendar_loss_per_day = 0;
        fade.depth_stress_exponent = 0;
    }
    auto cases = run_reference_cases(cfg.vehicle, fade, cfg.pack_range_mi,
                                     cfg.max_trace_miles);
    std::cout << "case  kwh/mi  pack_kwh  daily_kwh  eol_miles     cap@1M\n";
    for (const CaseResult& c : cases) {
        std::string eol = c.eol_miles ? fmt(*c.eol_miles, 0) : "beyond-trace";
        std::cout << std::left << std::setw(6) << c.spec.label << std::setw(8)
                  << fmt(c.energy_per_mile, 3) << std::setw(10)
                  << fmt(c.pack.capacity_kwh, 0) << std::setw(11)
                  << fmt(c.daily_energy_kwh, 0) << std::setw(14) << eol
                  << fmt(capacity_at(c.trace, 1e6), 4) << "\n";
        std::ostringstream csv;
        write_life_csv(csv, c.trace);
        outputs.save("life_" + c.spec.label + ".csv", csv.str());
    }
    return 0;
}

int cmd_tco(const RunConfig& cfg, RunOutputs& outputs, bool emit_plotdata) {
    ParameterRanges ranges = resolve_ranges(cfg);
    auto scenarios =
        sample_scenarios(ranges, cfg.samples, cfg.grid_points, cfg.seed);
    CpmDistributions cpm = cpm_distribution(scenarios, ranges, cfg.threads);

    std::size_t replaced = 0;
    for (const Scenario& s : scenarios) {
        replaced += s.needs_replacement ? 1 : 0;
    }
    std::cout << "scenarios: " << scenarios.size() << " (replacement drawn in "
              << replaced << ", fraction " << fmt(ranges.replacement_fraction, 2)
              << ")\n"
              << "replacement odometer: " << fmt(ranges.replacement_miles, 0)
              << " mi\n"
              << "cost per mile, diesel:   " << fmt(cpm.diesel.mean, 4) << " +- "
              << fmt(cpm.diesel.std_dev, 4) << " $/mi\n"
              << "cost per mile, electric: " << fmt(cpm.electric.mean, 4) << " +- "
              << fmt(cpm.electric.std_dev, 4) << " $/mi\n";

    std::ostringstream csv;
    write_scenarios_csv(csv, scenarios, ranges);
    outputs.save("scenarios.csv", csv.str());
    if (emit_plotdata) {
        std::ostringstream hd;
        write_histogram_csv(hd, cpm.diesel);
        outputs.save("cpm_diesel_hist.csv", hd.str());
        std::ostringstream he;
        write_histogram_csv(he, cpm.electric);
        outputs.save("cpm_electric_hist.csv", he.str());
    }
    return 0;
}

int cmd_payback(const RunConfig& cfg, RunOutputs& outputs, bool emit_plotdata) {
    ParameterRanges ranges = resolve_ranges(cfg);
    auto scenarios =
        sample_scenarios(ranges, cfg.samples, cfg.grid_points, cfg.seed);
    PaybackStats stats = payback_distribution(scenarios, ranges, cfg.threads);

    std::cout << "scenarios: " << stats.n_total << ", no break-even in "
              << stats.n_no_breakeven << " (" << fmt(stats.frac_no_breakeven, 4)
              << ")\n"
              << "payback: mean " << fmt(stats.payback.mean, 3) << " yr, std "
              << fmt(stats.payback.std_dev, 3) << " yr, median "
              << fmt(stats.median_payback_yr, 3) << " yr\n"
              << "odometer at break-even: " << fmt(stats.mean_odometer_mi, 0)
              << " mi (mean)\n";

    std::ostringstream csv;
    write_payback_csv(csv, scenarios, ranges);
    outputs.save("payback.csv", csv.str());
    if (emit_plotdata) {
        std::ostringstream h;
        write_histogram_csv(h, stats.payback);
        outputs.save("payback_hist.csv", h.str());
    }
    return 0;
}

int cmd_sensitivity(const RunConfig& cfg, RunOutputs& outputs,
                    const std::string& variable, const std::string& values_text,
                    const std::string& drag_text) {
    ParameterRanges ranges = resolve_ranges(cfg);
    if (!drag_text.empty()) {
        auto cds = parse_value_list(drag_text);
        auto points = drag_vignette(ranges, cfg.vehicle, cds, cfg.samples,
                                    cfg.grid_points, cfg.seed, cfg.threads);
        for (const VignettePoint& p : points) {
            std::cout << "cd " << fmt(p.cd, 2) << ": intensity "
                      << fmt(p.e_efficiency_kwh_mi, 3) << " kWh/mi, pack "
                      << fmt(p.pack_kwh, 0) << " kWh, mean payback "
                      << fmt(p.mean_payback_yr, 3) << " yr, no break-even "
                      << fmt(p.frac_no_breakeven, 4) << "\n";
        }
        std::ostringstream csv;
        write_vignette_csv(csv, points);
        outputs.save("vignette.csv", csv.str());
        return 0;
    }
    if (variable.empty()) {
        throw ArgumentError("sensitivity needs --variable with --values, or --drag");
    }
    auto values = parse_value_list(values_text);
    auto points = sensitivity_sweep(ranges, variable, values, cfg.samples,
                                    cfg.grid_points, cfg.seed, cfg.threads);
    for (const SensitivityPoint& p : points) {
        std::cout << p.variable << " = " << format_double(p.pinned_value)
                  << ": mean payback " << fmt(p.mean_payback_yr, 3)
                  << " yr, median " << fmt(p.median_payback_yr, 3)
                  << " yr, no break-even " << fmt(p.frac_no_breakeven, 4) << "\n";
    }
    std::ostringstream csv;
    write_sensitivity_csv(csv, points);
    outputs.save("sensitivity.csv", csv.str());
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"electric vs diesel semi truck duty, battery life, and cost model"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough();
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_option("--config", g.config_path, "config file of key = value lines");
    app.add_option("--out", g.out_dir, "output directory (default out)");
    app.add_option("--seed", g.seed, "Monte Carlo seed");
    app.add_option("--samples", g.samples, "Monte Carlo sample count");
    app.add_option("--grid-points", g.grid_points, "grid points per sampled range");
    app.add_option("--threads", g.threads, "worker threads for scenario evaluation");
    app.add_flag("--emit-plotdata", g.emit_plotdata, "also write histogram CSVs");

    auto* energy = app.add_subcommand("energy", "simulate one drive cycle");
    energy->fallthrough();
    std::string cycle_path;
    std::string cycle_kind = "composite";
    bool platoon = false;
    double pack_kwh = 1000.0;
    double daily_miles = 0.0;
    double freight_tons = 40.0;
    energy->add_option("--cycle", cycle_path, "cycle CSV (t_s,v_mps)");
    energy->add_option("--cycle-kind", cycle_kind,
                       "built-in cycle: cruise, composite, custom");
    energy->add_flag("--platoon", platoon, "apply the platooning energy factor");
    energy->add_option("--pack-kwh", pack_kwh, "pack size for the regen ceiling");
    energy->add_option("--daily-miles", daily_miles,
                       "stitch repetitions up to this daily distance first");
    energy->add_option("--freight-tons", freight_tons, "freight mass for Wh/ton-mi");

    auto* cyclelife = app.add_subcommand("cyclelife", "battery fade for the six reference duties");
    cyclelife->fallthrough();
    bool fade_zero = false;
    cyclelife->add_flag("--fade-zero", fade_zero, "disable fade (sanity baseline)");

    auto* tco = app.add_subcommand("tco", "Monte Carlo cost per mile");
    tco->fallthrough();
    auto* payback = app.add_subcommand("payback", "Monte Carlo payback distribution");
    payback->fallthrough();
    double rf_override = -1.0;
    double differential = -1.0;
    tco->add_option("--rf", rf_override, "override replacement fraction [0,1]");
    payback->add_option("--rf", rf_override, "override replacement fraction [0,1]");
    payback->add_option("--differential", differential,
                        "override electric minus diesel purchase price, $");

    auto* sensitivity = app.add_subcommand("sensitivity", "payback sweeps");
    sensitivity->fallthrough();
    std::string variable;
    std::string values_text;
    std::string drag_text;
    sensitivity->add_option("--variable", variable, "one of the sweep variables");
    sensitivity->add_option("--values", values_text, "comma separated pin values");
    sensitivity->add_option("--drag", drag_text,
                            "comma separated drag coefficients (first is baseline)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg = build_config(app, g);
        if (rf_override >= 0) {
            cfg.ranges.replacement_fraction = rf_override;
            validate_config(cfg);
        }
        if (differential >= 0) {
            cfg.ranges.e_initial_price = cfg.ranges.d_initial_price + differential;
        }
        RunOutputs outputs{g.out_dir, {}};
        int rc = 1;
        std::string command;
        if (energy->parsed()) {
            command = "energy";
            rc = cmd_energy(cfg, outputs, cycle_path, cycle_kind, platoon,
                            pack_kwh, daily_miles, freight_tons);
        } else if (cyclelife->parsed()) {
            command = "cyclelife";
            rc = cmd_cyclelife(cfg, outputs, fade_zero);
        } else if (tco->parsed()) {
            command = "tco";
            rc = cmd_tco(cfg, outputs, g.emit_plotdata);
        } else if (payback->parsed()) {
            command = "payback";
            rc = cmd_payback(cfg, outputs, g.emit_plotdata);
        } else if (sensitivity->parsed()) {
            command = "sensitivity";
            rc = cmd_sensitivity(cfg, outputs, variable, values_text, drag_text);
        }
        if (rc == 0) {
            write_manifest(outputs, command, cfg);
        }
        return rc;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace haulsim
