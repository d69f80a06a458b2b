#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "haulsim/economics.hpp"
#include "haulsim/payback.hpp"
#include "haulsim/powertrain.hpp"

namespace haulsim {

// All CSV output funnels through here so numbers format identically
// everywhere: shortest round-trippable-ish form, 12 significant digits.
std::string format_double(double x);

void write_energy_trace_csv(std::ostream& out, const EnergyTrace& trace);

// One row per scenario with every sampled input and both $/mi results.
void write_scenarios_csv(std::ostream& out,
                         const std::vector<Scenario>& scenarios,
                         const ParameterRanges& ranges);

// Scenario rows extended with the payback outcome.
void write_payback_csv(std::ostream& out,
                       const std::vector<Scenario>& scenarios,
                       const ParameterRanges& ranges);

void write_sensitivity_csv(std::ostream& out,
                           const std::vector<SensitivityPoint>& points);

void write_vignette_csv(std::ostream& out,
                        const std::vector<VignettePoint>& points);

// Fixed-width histogram for plotting, "bin_lo,bin_hi,count".
void write_histogram_csv(std::ostream& out, const Distribution& dist,
                         int bins = 50);

// Opens for writing, throws ArgumentError on failure.
void write_file(const std::string& path, const std::string& contents);

}  // namespace haulsim
