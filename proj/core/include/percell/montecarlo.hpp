#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "percell/spatial.hpp"

namespace percell {

// One percolation-probability sweep over a lambda_a grid at fixed lambda_b.
struct SweepSpec {
    SharingStrategy strategy = SharingStrategy::NoSharing;
    std::vector<double> lambda_a_grid;  // strictly increasing
    double lambda_b = 0.0;
    int trials = 200;
    Window window;
    uint64_t master_seed = 0;
    Connectivity connectivity = Connectivity::Eight;
    CrossingAxis crossing = CrossingAxis::LeftRight;
    SystemParams params;

    void check() const;  // throws InvalidSweep / InvalidWindow
};

struct SweepPoint {
    double lambda_a = 0.0;
    double lambda_b = 0.0;
    int trials = 0;
    double perc_prob = 0.0;  // crossing frequency
    double ci_low = 0.0;     // 95% Wilson interval
    double ci_high = 0.0;
    double cov_prop_mean = 0.0;  // mean covered fraction of the interior
    double cov_prop_sd = 0.0;    // sample standard deviation
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

// Deterministic seed of trial `trial_index` at grid position `grid_index`.
uint64_t trial_seed(uint64_t master_seed, int grid_index, int trial_index);

// Runs trials*grid independent trials (sample deployment, rasterize coverage,
// label, record crossing + covered fraction) and aggregates. Trials are
// schedule-independent: per-trial seeds depend only on (master_seed, indices)
// and results land in per-index slots before reduction.
SweepResult run_sweep(const SweepSpec& spec);

// Same harness with coverage = union of fixed-radius disks (no SINR).
SweepResult run_gdm_sweep(const std::vector<double>& lambda_grid,
                          double radius, int trials, const Window& window,
                          uint64_t master_seed,
                          Connectivity connectivity = Connectivity::Eight,
                          CrossingAxis crossing = CrossingAxis::LeftRight);

// Hexagonal cells in odd-row offset layout; neighbors share an edge
// (6-neighborhood, i.e. triangular-lattice site adjacency).
struct HexLattice {
    int cols = 100;
    int rows = 100;
    double open_prob = 0.5;
    uint64_t seed = 0;
};

// Frequency of a left-right crossing of open cells over `trials` lattices.
double run_hex_site(const HexLattice& lattice, int trials);

// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(int successes, int trials,
                                          double confidence);

// Canonical field-by-field serialization used for config hashing; two specs
// with equal strings produce byte-identical sweep CSVs.
std::string canonical_string(const SweepSpec& spec);

} // namespace percell
