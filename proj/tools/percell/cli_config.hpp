#pragma once

#include <string>
#include <vector>

#include "percell/montecarlo.hpp"

namespace percell::cli {

// Everything a subcommand needs, merged from defaults, --config JSON and
// explicit flags (flags win).
struct RunConfig {
    SystemParams params;
    SharingStrategy strategy = SharingStrategy::NoSharing;
    int trials = 200;
    uint64_t seed = 42;
    Window window;  // guard meaningful only when guard_set
    bool guard_set = false;
    double lambda_b = 0.0;
    std::vector<double> lambda_a_grid;
    std::vector<double> open_prob_grid;
    int hex_rows = 100;
    int hex_cols = 100;
    Connectivity connectivity = Connectivity::Eight;
    CrossingAxis crossing = CrossingAxis::LeftRight;
    std::string out_path;  // empty = stdout
    std::string svg_path;  // empty = no chart
    bool pgm = false;      // dump first-trial rasters next to the CSV
};

// "start:stop:steps" with an optional "lin:"/"log:" prefix (linear default);
// steps is the number of grid points, steps == 1 yields {start}.
std::vector<double> parse_grid(const std::string& text);

// Strict JSON: unknown keys anywhere are InvalidConfig. Grid-valued keys
// accept either a spec string or an array of numbers.
void load_config_file(const std::string& path, RunConfig& cfg);

SharingStrategy parse_strategy(const std::string& name);
Connectivity parse_connectivity(int value);
CrossingAxis parse_crossing(const std::string& name);

} // namespace percell::cli
