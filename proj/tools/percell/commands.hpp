#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cli_config.hpp"

namespace percell::cli {

// Pure command results; main() does the file IO.
struct CommandOutput {
    std::string csv;
    std::string svg;  // empty unless a chart was requested
    std::vector<std::pair<std::string, std::string>> extra_files;  // name, bytes
};

// lambda,r_m,lower_bound,upper_bound,warn_no_percolation,error over the
// lambda_a grid; per-row failures land in the error column instead of
// aborting the sweep.
CommandOutput cmd_radius(const RunConfig& cfg);

// strategy,lambda_b,required_lambda_a: analytic critical density for no
// sharing and passive sharing, bisected phase_active root for active sharing.
CommandOutput cmd_critical(const RunConfig& cfg);

// strategy,lambda_a,lambda_b,trials,perc_prob,ci_low,ci_high,cov_prop_mean,
// cov_prop_sd from run_sweep; optional SVG series and first-trial PGM rasters.
CommandOutput cmd_sweep(const RunConfig& cfg);

// open_prob,crossing_freq from run_hex_site, one row per grid point, common
// random numbers across the grid.
CommandOutput cmd_hex(const RunConfig& cfg);

// Guard used when none was given: twice the average coverage radius at the
// densest configuration in play, never beyond twice the pure-SNR radius.
double default_guard(const RunConfig& cfg);

int run_main(int argc, char** argv);

} // namespace percell::cli
