#pragma once

#include <cstdint>
#include <vector>

#include "percell/analytic.hpp"
#include "percell/params.hpp"

namespace percell {

struct Point {
    double x = 0.0;  // m
    double y = 0.0;  // m
};

// Interior observation window [0,width]x[0,height]; BSs are sampled over the
// guard-extended rectangle [-guard, width+guard]x[-guard, height+guard] but
// coverage and percolation are measured on the interior raster only.
struct Window {
    double width = 4000.0;   // m
    double height = 4000.0;  // m
    double guard = 0.0;      // sampling margin on each side [m]
    double pixel = 10.0;     // raster resolution [m]

    int nx() const;  // interior raster columns
    int ny() const;  // interior raster rows

    // Throws InvalidWindow unless width, height, pixel > 0, guard >= 0 and
    // pixel <= min(width, height)/10.
    void check() const;
};

struct Deployment {
    std::vector<Point> points_a;
    std::vector<Point> points_b;
    double lambda_a = 0.0;
    double lambda_b = 0.0;
    Window window;
    uint64_t seed = 0;
};

// Rasterized coverage field of one sharing strategy. Row-major storage,
// index = iy*nx + ix; pixel (ix,iy) has its center at
// ((ix+0.5)*pixel, (iy+0.5)*pixel) in interior coordinates.
struct CoverageGrid {
    int nx = 0;
    int ny = 0;
    SharingStrategy strategy = SharingStrategy::NoSharing;
    std::vector<uint8_t> covered;        // 0/1 per pixel
    std::vector<uint16_t> cover_count;   // BSs whose SINR >= beta at the pixel
    std::vector<int32_t> serving_index;  // nearest eligible site, -1 when none

    bool at(int ix, int iy) const { return covered[size_t(iy) * nx + ix] != 0; }
    double covered_fraction() const;
};

// N ~ Poisson(lambda * extended area), then N uniform points over the
// guard-extended rectangle. Deterministic in (lambda, window, seed).
std::vector<Point> sample_ppp(double lambda, const Window& window,
                              uint64_t seed);

// Both networks sampled from per-network streams derived from one seed.
Deployment sample_deployment(double lambda_a, double lambda_b,
                             const Window& window, uint64_t seed);

// SINR of signal_bs at z with every entry of interferers contributing
// gamma-scaled interference. signal_bs must not be listed in interferers.
double sinr_at(Point z, Point signal_bs, const std::vector<Point>& interferers,
               const SystemParams& p);

// Per-pixel coverage under the strategy's signal/interference composition:
//   NoSharing      test Phi_a against Phi_a interference
//   ActiveSharing  covered by Phi_a-only OR Phi_b-only (separate spectra)
//   PassiveSharing single combined network Phi_a U Phi_b on one spectrum
// Same-power monotonicity makes the nearest in-network BS the max-SINR one,
// so each spectrum needs one total-power accumulation per pixel.
CoverageGrid coverage_grid(SharingStrategy strategy,
                           const Deployment& deployment,
                           const SystemParams& p);

struct SetEqualityReport {
    bool equal = false;
    long mismatches = 0;
};

// Checks per pixel that any-BS coverage equals nearest-BS-only coverage
// (union of strongest coverage areas == union of coverage areas) for a
// single-spectrum composition.
SetEqualityReport sca_union_equals_ca_union(const Deployment& deployment,
                                            const SystemParams& p,
                                            SharingStrategy strategy =
                                                SharingStrategy::NoSharing);

enum class Connectivity { Four = 4, Eight = 8 };

struct LabelResult {
    int nx = 0;
    int ny = 0;
    std::vector<int32_t> labels;  // 0 = uncovered, components numbered 1..K
    std::vector<long> sizes;      // sizes[k-1] = pixel count of component k
};

LabelResult label_components(const CoverageGrid& grid,
                             Connectivity connectivity = Connectivity::Eight);

enum class CrossingAxis { LeftRight, BothAxes };

// LeftRight: one component touches both the left and right boundary columns.
// BothAxes: additionally some component (possibly another) spans top-bottom.
bool has_crossing(const LabelResult& labels,
                  CrossingAxis axis = CrossingAxis::LeftRight);

// Union of fixed-radius disks rasterized on the interior window (no SINR);
// cover_count = number of disks containing the pixel center.
CoverageGrid disk_union_grid(const std::vector<Point>& centers, double radius,
                             const Window& window);

} // namespace percell
