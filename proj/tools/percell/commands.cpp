#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "percell/analytic.hpp"
#include "percell/report.hpp"

namespace percell::cli {

namespace {

std::string params_fragment(const SystemParams& p) {
    std::string s = format_double(p.pt_db);
    s += ",";
    s += format_double(p.n0_db);
    s += ",";
    s += format_double(p.beta_db);
    s += ",";
    s += format_double(p.gamma);
    s += ",";
    s += format_double(p.alpha);
    return s;
}

std::string grid_fragment(const std::vector<double>& grid) {
    std::string s;
    for (size_t i = 0; i < grid.size(); ++i) {
        if (i > 0) s += ",";
        s += format_double(grid[i]);
    }
    return s;
}

std::string out_stem(const std::string& path) {
    if (path.empty()) return "sweep";
    const size_t slash = path.find_last_of("/\\");
    const size_t dot = path.find_last_of('.');
    if (dot == std::string::npos ||
        (slash != std::string::npos && dot < slash))
        return path;
    return path.substr(0, dot);
}

// root of phase_active margin in lambda_a at fixed lambda_b; the margin is
// strictly increasing in lambda_a and nonnegative at the no-sharing critical
// density, so [0, crit_none] always brackets
double active_required_lambda_a(const SystemParams& p, double lambda_b) {
    const double crit = critical_density_no_sharing(p);
    if (phase_active(0.0, lambda_b, p).margin >= 0.0) return 0.0;
    double lo = 0.0, hi = crit;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (phase_active(mid, lambda_b, p).margin < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

CommandOutput cmd_radius(const RunConfig& cfg) {
    if (cfg.lambda_a_grid.empty())
        fail(ErrorCode::InvalidConfig, "radius needs --lambda-a-grid");
    for (double lam : cfg.lambda_a_grid)
        if (lam < 0.0)
            fail(ErrorCode::InvalidConfig, "densities must be nonnegative");
    const ValidationReport rep = validate(cfg.params);
    const char* warn = rep.percolation_possible ? "0" : "1";

    CsvWriter csv;
    csv.set_comment(fnv1a64("radius|params=" + params_fragment(cfg.params) +
                            "|grid=" + grid_fragment(cfg.lambda_a_grid)),
                    cfg.seed);
    csv.set_header({"lambda", "r_m", "lower_bound", "upper_bound",
                    "warn_no_percolation", "error"});
    for (double lam : cfg.lambda_a_grid) {
        std::string rm = "nan", lo = "nan", hi = "nan", err;
        try {
            rm = format_double(avg_coverage_radius(lam, cfg.params));
            const auto [l, h] = radius_bounds(lam, cfg.params);
            lo = format_double(l);
            hi = format_double(h);
        } catch (const Error& e) {
            err = to_string(e.code());
        }
        csv.add_row({format_double(lam), rm, lo, hi, warn, err});
    }
    return {csv.str(), {}, {}};
}

CommandOutput cmd_critical(const RunConfig& cfg) {
    validate(cfg.params);
    if (cfg.lambda_b < 0.0)
        fail(ErrorCode::InvalidConfig, "lambda_b must be nonnegative");

    CsvWriter csv;
    csv.set_comment(fnv1a64("critical|params=" + params_fragment(cfg.params) +
                            "|lambda_b=" + format_double(cfg.lambda_b)),
                    cfg.seed);
    csv.set_header({"strategy", "lambda_b", "required_lambda_a"});

    const std::string lb = format_double(cfg.lambda_b);
    csv.add_row({"none", lb, format_double(critical_density_no_sharing(cfg.params))});
    csv.add_row({"passive", lb,
                 format_double(std::max(
                     0.0, critical_density_passive(cfg.params) - cfg.lambda_b))});
    csv.add_row({"active", lb,
                 format_double(active_required_lambda_a(cfg.params, cfg.lambda_b))});
    return {csv.str(), {}, {}};
}

CommandOutput cmd_sweep(const RunConfig& cfg) {
    SweepSpec spec;
    spec.strategy = cfg.strategy;
    spec.lambda_a_grid = cfg.lambda_a_grid;
    spec.lambda_b = cfg.lambda_b;
    spec.trials = cfg.trials;
    spec.window = cfg.window;
    if (!cfg.guard_set) spec.window.guard = default_guard(cfg);
    spec.master_seed = cfg.seed;
    spec.connectivity = cfg.connectivity;
    spec.crossing = cfg.crossing;
    spec.params = cfg.params;
    spec.check();

    const SweepResult res = run_sweep(spec);

    CsvWriter csv;
    csv.set_comment(fnv1a64(canonical_string(spec)), cfg.seed);
    csv.set_header({"strategy", "lambda_a", "lambda_b", "trials", "perc_prob",
                    "ci_low", "ci_high", "cov_prop_mean", "cov_prop_sd"});
    for (const SweepPoint& pt : res.points)
        csv.add_row({to_string(spec.strategy), format_double(pt.lambda_a),
                     format_double(pt.lambda_b), std::to_string(pt.trials),
                     format_double(pt.perc_prob), format_double(pt.ci_low),
                     format_double(pt.ci_high), format_double(pt.cov_prop_mean),
                     format_double(pt.cov_prop_sd)});

    CommandOutput out{csv.str(), {}, {}};
    if (!cfg.svg_path.empty()) {
        SvgSeries series{to_string(spec.strategy), {}};
        for (const SweepPoint& pt : res.points)
            series.xy.emplace_back(pt.lambda_a, pt.perc_prob);
        out.svg = svg_line_chart({series}, "lambda_a [m^-2]",
                                 "percolation probability");
    }
    if (cfg.pgm) {
        const std::string stem = out_stem(cfg.out_path);
        for (size_t gi = 0; gi < spec.lambda_a_grid.size(); ++gi) {
            const uint64_t seed = trial_seed(spec.master_seed, int(gi), 0);
            const Deployment d = sample_deployment(
                spec.lambda_a_grid[gi], spec.lambda_b, spec.window, seed);
            const CoverageGrid g = coverage_grid(spec.strategy, d, spec.params);
            out.extra_files.emplace_back(
                stem + "_gp" + std::to_string(gi) + ".pgm", pgm_bytes(g));
        }
    }
    return out;
}

CommandOutput cmd_hex(const RunConfig& cfg) {
    if (cfg.open_prob_grid.empty())
        fail(ErrorCode::InvalidConfig, "hex needs --open-prob-grid");

    CsvWriter csv;
    csv.set_comment(
        fnv1a64("hex|rows=" + std::to_string(cfg.hex_rows) +
                "|cols=" + std::to_string(cfg.hex_cols) +
                "|trials=" + std::to_string(cfg.trials) +
                "|seed=" + std::to_string(cfg.seed) +
                "|grid=" + grid_fragment(cfg.open_prob_grid)),
        cfg.seed);
    csv.set_header({"open_prob", "crossing_freq"});

    std::vector<std::pair<double, double>> xy;
    for (double p : cfg.open_prob_grid) {
        // one seed for the whole grid: common random numbers across p
        const HexLattice lattice{cfg.hex_cols, cfg.hex_rows, p, cfg.seed};
        const double freq = run_hex_site(lattice, cfg.trials);
        csv.add_row({format_double(p), format_double(freq)});
        xy.emplace_back(p, freq);
    }

    CommandOutput out{csv.str(), {}, {}};
    if (!cfg.svg_path.empty())
        out.svg = svg_line_chart({SvgSeries{"crossing", xy}}, "open probability",
                                 "crossing frequency");
    return out;
}

double default_guard(const RunConfig& cfg) {
    double lam = 0.0;
    for (double v : cfg.lambda_a_grid) lam = std::max(lam, v);
    if (cfg.strategy == SharingStrategy::ActiveSharing)
        lam = std::max(lam, cfg.lambda_b);
    else if (cfg.strategy == SharingStrategy::PassiveSharing)
        lam += cfg.lambda_b;

    const double cap = 2.0 * snr_radius(cfg.params);
    try {
        return std::min(2.0 * avg_coverage_radius(lam, cfg.params), cap);
    } catch (const Error&) {
        return cap;  // radius degenerate; fall back to the SNR disk
    }
}

namespace {

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    out.write(bytes.data(), std::streamsize(bytes.size()));
    if (!out) fail(ErrorCode::IoError, "short write to '" + path + "'");
}

} // namespace

int run_main(int argc, char** argv) {
    CLI::App app{"Analytic and Monte Carlo percolation criteria for "
                 "sharing-enabled cellular networks"};
    app.require_subcommand(1);

    auto* radius = app.add_subcommand(
        "radius", "average coverage radius and bounds over a density grid");
    auto* critical = app.add_subcommand(
        "critical", "critical densities per sharing strategy");
    auto* sweep = app.add_subcommand(
        "sweep", "Monte Carlo percolation probability sweep");
    auto* hex = app.add_subcommand(
        "hex", "hexagonal-lattice site percolation crossing frequency");
    for (auto* sub : {radius, critical, sweep, hex}) sub->fallthrough();

    std::string config_path, out_path, svg_path;
    std::string strategy_name, crossing_name, la_grid, p_grid;
    uint64_t seed = 0;
    int trials = 0, conn = 0, rows = 0, cols = 0;
    double pixel = 0.0, guard = 0.0, width = 0.0, height = 0.0, lambda_b = 0.0;
    bool pgm = false;

    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--out", out_path, "CSV output path (default: stdout)");
    app.add_option("--svg", svg_path, "SVG chart path (sweep, hex)");
    app.add_option("--trials", trials, "Monte Carlo trials per grid point");
    app.add_option("--seed", seed, "master RNG seed");
    app.add_option("--pixel", pixel, "raster pixel size [m]");
    app.add_option("--guard", guard, "BS sampling margin outside the window [m]");
    app.add_option("--width", width, "observation window width [m]");
    app.add_option("--height", height, "observation window height [m]");
    app.add_option("--connectivity", conn, "pixel adjacency")
        ->check(CLI::IsMember({4, 8}));
    app.add_option("--strategy", strategy_name, "sharing strategy")
        ->check(CLI::IsMember({"none", "active", "passive"}));
    app.add_option("--crossing", crossing_name, "crossing rule")
        ->check(CLI::IsMember({"lr", "both"}));
    app.add_option("--lambda-b", lambda_b, "MNO b density [m^-2]");
    app.add_option("--lambda-a-grid", la_grid,
                   "density grid [lin:|log:]start:stop:steps");
    app.add_option("--open-prob-grid", p_grid,
                   "hex open probability grid, same syntax");
    app.add_option("--rows", rows, "hex lattice rows");
    app.add_option("--cols", cols, "hex lattice columns");
    app.add_flag("--pgm", pgm, "dump first-trial coverage rasters (sweep)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        RunConfig cfg;
        if (app.count("--config")) load_config_file(config_path, cfg);
        if (app.count("--strategy")) cfg.strategy = parse_strategy(strategy_name);
        if (app.count("--trials")) cfg.trials = trials;
        if (app.count("--seed")) cfg.seed = seed;
        if (app.count("--pixel")) cfg.window.pixel = pixel;
        if (app.count("--width")) cfg.window.width = width;
        if (app.count("--height")) cfg.window.height = height;
        if (app.count("--guard")) {
            cfg.window.guard = guard;
            cfg.guard_set = true;
        }
        if (app.count("--connectivity"))
            cfg.connectivity = parse_connectivity(conn);
        if (app.count("--crossing")) cfg.crossing = parse_crossing(crossing_name);
        if (app.count("--lambda-b")) cfg.lambda_b = lambda_b;
        if (app.count("--lambda-a-grid")) cfg.lambda_a_grid = parse_grid(la_grid);
        if (app.count("--open-prob-grid")) cfg.open_prob_grid = parse_grid(p_grid);
        if (app.count("--rows")) cfg.hex_rows = rows;
        if (app.count("--cols")) cfg.hex_cols = cols;
        if (app.count("--out")) cfg.out_path = out_path;
        if (app.count("--svg")) cfg.svg_path = svg_path;
        if (pgm) cfg.pgm = true;

        CommandOutput out;
        if (radius->parsed()) out = cmd_radius(cfg);
        else if (critical->parsed()) out = cmd_critical(cfg);
        else if (sweep->parsed()) out = cmd_sweep(cfg);
        else out = cmd_hex(cfg);

        if (cfg.out_path.empty()) std::cout << out.csv;
        else write_file(cfg.out_path, out.csv);
        if (!out.svg.empty() && !cfg.svg_path.empty())
            write_file(cfg.svg_path, out.svg);
        for (const auto& [name, bytes] : out.extra_files)
            write_file(name, bytes);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what()
                  << "\n";
        switch (e.code()) {
            case ErrorCode::RadiusBelowUnit:
            case ErrorCode::BracketNonPositive: return 3;
            default: return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace percell::cli
