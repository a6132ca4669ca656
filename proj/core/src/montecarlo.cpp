#include "percell/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "percell/report.hpp"
#include "rng.hpp"

namespace percell {

namespace {

// Runs body(t) for t in [0, count) with per-index result slots; any schedule
// produces identical results because nothing is shared but the work queue.
void parallel_for(int count, const std::function<void(int)>& body) {
    const unsigned hw = std::thread::hardware_concurrency();
    const int nthreads = int(std::min<unsigned>(hw > 0 ? hw : 1, unsigned(count)));
    if (nthreads <= 1) {
        for (int t = 0; t < count; ++t) body(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(size_t(nthreads));
    for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const int t = next.fetch_add(1);
                if (t >= count) return;
                body(t);
            }
        });
    }
    for (auto& th : pool) th.join();
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty())
        fail(ErrorCode::InvalidSweep, "density grid must be non-empty");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0)
            fail(ErrorCode::InvalidSweep, "densities must be nonnegative");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            fail(ErrorCode::InvalidSweep, "density grid must be strictly increasing");
    }
}

SweepPoint aggregate_point(double lambda_a, double lambda_b, int trials,
                           const std::vector<uint8_t>& crossed,
                           const std::vector<double>& cov) {
    SweepPoint pt;
    pt.lambda_a = lambda_a;
    pt.lambda_b = lambda_b;
    pt.trials = trials;
    int hits = 0;
    for (uint8_t c : crossed) hits += c;
    pt.perc_prob = double(hits) / double(trials);
    std::tie(pt.ci_low, pt.ci_high) = wilson_interval(hits, trials, 0.95);
    double mean = 0.0;
    for (double v : cov) mean += v;
    mean /= double(trials);
    double ss = 0.0;
    for (double v : cov) ss += (v - mean) * (v - mean);
    pt.cov_prop_mean = mean;
    pt.cov_prop_sd = trials > 1 ? std::sqrt(ss / double(trials - 1)) : 0.0;
    return pt;
}

} // namespace

void SweepSpec::check() const {
    window.check();
    if (trials < 1) fail(ErrorCode::InvalidSweep, "trials must be >= 1");
    check_grid(lambda_a_grid);
    if (lambda_b < 0.0)
        fail(ErrorCode::InvalidSweep, "lambda_b must be nonnegative");
}

uint64_t trial_seed(uint64_t master_seed, int grid_index, int trial_index) {
    const uint64_t g = detail::mix_seed(master_seed, 0x6714u + uint64_t(grid_index));
    return detail::mix_seed(g, uint64_t(trial_index));
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.check();
    validate(spec.params);
    SweepResult out;
    out.points.reserve(spec.lambda_a_grid.size());
    for (size_t gi = 0; gi < spec.lambda_a_grid.size(); ++gi) {
        const double la = spec.lambda_a_grid[gi];
        std::vector<uint8_t> crossed(size_t(spec.trials), 0);
        std::vector<double> cov(size_t(spec.trials), 0.0);
        parallel_for(spec.trials, [&](int t) {
            const uint64_t seed = trial_seed(spec.master_seed, int(gi), t);
            const Deployment d =
                sample_deployment(la, spec.lambda_b, spec.window, seed);
            const CoverageGrid g = coverage_grid(spec.strategy, d, spec.params);
            const LabelResult lab = label_components(g, spec.connectivity);
            crossed[size_t(t)] = has_crossing(lab, spec.crossing);
            cov[size_t(t)] = g.covered_fraction();
        });
        out.points.push_back(
            aggregate_point(la, spec.lambda_b, spec.trials, crossed, cov));
    }
    return out;
}

SweepResult run_gdm_sweep(const std::vector<double>& lambda_grid,
                          double radius, int trials, const Window& window,
                          uint64_t master_seed, Connectivity connectivity,
                          CrossingAxis crossing) {
    window.check();
    check_grid(lambda_grid);
    if (trials < 1) fail(ErrorCode::InvalidSweep, "trials must be >= 1");
    if (!(radius > 0.0 &&
          2.0 * radius < std::min(window.width, window.height))) {
        std::ostringstream os;
        os << "disk radius " << radius << " m must be positive and small "
           << "against the window";
        fail(ErrorCode::InvalidSweep, os.str());
    }
    SweepResult out;
    out.points.reserve(lambda_grid.size());
    for (size_t gi = 0; gi < lambda_grid.size(); ++gi) {
        const double lam = lambda_grid[gi];
        std::vector<uint8_t> crossed(size_t(trials), 0);
        std::vector<double> cov(size_t(trials), 0.0);
        parallel_for(trials, [&](int t) {
            const uint64_t seed = trial_seed(master_seed, int(gi), t);
            const std::vector<Point> pts = sample_ppp(lam, window, seed);
            const CoverageGrid g = disk_union_grid(pts, radius, window);
            const LabelResult lab = label_components(g, connectivity);
            crossed[size_t(t)] = has_crossing(lab, crossing);
            cov[size_t(t)] = g.covered_fraction();
        });
        out.points.push_back(aggregate_point(lam, 0.0, trials, crossed, cov));
    }
    return out;
}

double run_hex_site(const HexLattice& lattice, int trials) {
    if (lattice.cols < 2 || lattice.rows < 2)
        fail(ErrorCode::InvalidSweep, "hex lattice needs at least 2x2 cells");
    if (!(lattice.open_prob >= 0.0 && lattice.open_prob <= 1.0))
        fail(ErrorCode::OutOfRangeProbability, "open_prob outside [0,1]");
    if (trials < 1) fail(ErrorCode::InvalidSweep, "trials must be >= 1");

    const int rows = lattice.rows, cols = lattice.cols;
    const int ncell = rows * cols;
    std::vector<uint8_t> hits(size_t(trials), 0);

    parallel_for(trials, [&](int t) {
        detail::Rng rng(detail::mix_seed(lattice.seed, uint64_t(t)));
        std::vector<uint8_t> open(static_cast<size_t>(ncell));
        for (int i = 0; i < ncell; ++i)
            open[size_t(i)] = rng.next_bernoulli(lattice.open_prob);

        std::vector<int32_t> parent(static_cast<size_t>(ncell));
        for (int i = 0; i < ncell; ++i) parent[size_t(i)] = i;
        auto find = [&](int32_t a) {
            while (parent[size_t(a)] != a) {
                parent[size_t(a)] = parent[size_t(parent[size_t(a)])];
                a = parent[size_t(a)];
            }
            return a;
        };
        auto unite = [&](int32_t a, int32_t b) {
            a = find(a);
            b = find(b);
            if (a != b) parent[size_t(a)] = b;
        };

        // odd-row offset layout; edge-sharing neighbors form the triangular
        // site adjacency: same-row left/right plus two cells in the next row
        // whose column shift depends on row parity
        for (int i = 0; i < rows; ++i) {
            const bool odd = (i & 1) != 0;
            for (int j = 0; j < cols; ++j) {
                const int32_t c = i * cols + j;
                if (!open[size_t(c)]) continue;
                if (j + 1 < cols && open[size_t(c + 1)]) unite(c, c + 1);
                if (i + 1 < rows) {
                    const int dj0 = odd ? 0 : -1;
                    for (int k = 0; k < 2; ++k) {
                        const int jj = j + dj0 + k;
                        if (jj < 0 || jj >= cols) continue;
                        const int32_t d = (i + 1) * cols + jj;
                        if (open[size_t(d)]) unite(c, d);
                    }
                }
            }
        }

        std::vector<uint8_t> left(static_cast<size_t>(ncell), 0);
        bool crossing = false;
        for (int i = 0; i < rows && !crossing; ++i)
            if (open[size_t(i * cols)]) left[size_t(find(i * cols))] = 1;
        for (int i = 0; i < rows && !crossing; ++i) {
            const int32_t c = i * cols + cols - 1;
            if (open[size_t(c)] && left[size_t(find(c))]) crossing = true;
        }
        hits[size_t(t)] = crossing;
    });

    long total = 0;
    for (uint8_t h : hits) total += h;
    return double(total) / double(trials);
}

std::pair<double, double> wilson_interval(int successes, int trials,
                                          double confidence) {
    if (trials < 1 || successes < 0 || successes > trials)
        fail(ErrorCode::InvalidSweep, "wilson_interval needs 0 <= successes <= trials");
    if (!(confidence > 0.0 && confidence < 1.0))
        fail(ErrorCode::OutOfRangeProbability, "confidence outside (0,1)");
    const boost::math::normal_distribution<double> norm;
    const double z = boost::math::quantile(norm, 1.0 - (1.0 - confidence) / 2.0);
    const double n = double(trials);
    const double phat = double(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    // the interval touches the point estimate at the extremes; rounding in
    // center - half must not push the bound past it
    const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

std::string canonical_string(const SweepSpec& spec) {
    std::string s = "sweep|strategy=";
    s += to_string(spec.strategy);
    s += "|params=";
    s += format_double(spec.params.pt_db);
    s += ",";
    s += format_double(spec.params.n0_db);
    s += ",";
    s += format_double(spec.params.beta_db);
    s += ",";
    s += format_double(spec.params.gamma);
    s += ",";
    s += format_double(spec.params.alpha);
    s += "|lambda_b=";
    s += format_double(spec.lambda_b);
    s += "|trials=";
    s += std::to_string(spec.trials);
    s += "|window=";
    s += format_double(spec.window.width);
    s += ",";
    s += format_double(spec.window.height);
    s += ",";
    s += format_double(spec.window.guard);
    s += ",";
    s += format_double(spec.window.pixel);
    s += "|seed=";
    s += std::to_string(spec.master_seed);
    s += "|connectivity=";
    s += std::to_string(int(spec.connectivity));
    s += "|crossing=";
    s += spec.crossing == CrossingAxis::LeftRight ? "lr" : "both";
    s += "|grid=";
    for (size_t i = 0; i < spec.lambda_a_grid.size(); ++i) {
        if (i > 0) s += ",";
        s += format_double(spec.lambda_a_grid[i]);
    }
    return s;
}

} // namespace percell
