#include "cli_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace percell::cli {

using nlohmann::json;

std::vector<double> parse_grid(const std::string& text) {
    std::string body = text;
    bool log_spacing = false;
    if (body.rfind("log:", 0) == 0) {
        log_spacing = true;
        body = body.substr(4);
    } else if (body.rfind("lin:", 0) == 0) {
        body = body.substr(4);
    }

    double start = 0.0, stop = 0.0;
    long steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(body);
    if (!(is >> start >> c1 >> stop >> c2 >> steps) || c1 != ':' || c2 != ':' ||
        !(is >> std::ws).eof())
        fail(ErrorCode::InvalidConfig,
             "grid must be [lin:|log:]start:stop:steps, got '" + text + "'");
    if (steps < 1)
        fail(ErrorCode::InvalidConfig, "grid needs at least one step");
    if (steps > 1 && !(stop > start))
        fail(ErrorCode::InvalidConfig, "grid stop must exceed start");
    if (log_spacing && !(start > 0.0))
        fail(ErrorCode::InvalidConfig, "log grid needs positive start");

    std::vector<double> grid;
    grid.reserve(size_t(steps));
    if (steps == 1) {
        grid.push_back(start);
        return grid;
    }
    for (long i = 0; i < steps; ++i) {
        const double f = double(i) / double(steps - 1);
        grid.push_back(log_spacing
                           ? std::exp(std::log(start) +
                                      f * (std::log(stop) - std::log(start)))
                           : start + f * (stop - start));
    }
    grid.front() = start;
    grid.back() = stop;
    return grid;
}

namespace {

std::vector<double> grid_value(const json& v, const std::string& key) {
    if (v.is_string()) return parse_grid(v.get<std::string>());
    if (v.is_array()) {
        std::vector<double> grid;
        for (const auto& e : v) {
            if (!e.is_number())
                fail(ErrorCode::InvalidConfig, key + " array must be numeric");
            grid.push_back(e.get<double>());
        }
        return grid;
    }
    fail(ErrorCode::InvalidConfig, key + " must be a grid string or array");
}

void apply_params(const json& obj, SystemParams& p) {
    for (const auto& [key, v] : obj.items()) {
        if (!v.is_number())
            fail(ErrorCode::InvalidConfig, "params." + key + " must be numeric");
        const double x = v.get<double>();
        if (key == "pt_db") p.pt_db = x;
        else if (key == "n0_db") p.n0_db = x;
        else if (key == "beta_db") p.beta_db = x;
        else if (key == "gamma") p.gamma = x;
        else if (key == "alpha") p.alpha = x;
        else fail(ErrorCode::InvalidConfig, "unknown params key '" + key + "'");
    }
}

void apply_window(const json& obj, RunConfig& cfg) {
    for (const auto& [key, v] : obj.items()) {
        if (!v.is_number())
            fail(ErrorCode::InvalidConfig, "window." + key + " must be numeric");
        const double x = v.get<double>();
        if (key == "width") cfg.window.width = x;
        else if (key == "height") cfg.window.height = x;
        else if (key == "pixel") cfg.window.pixel = x;
        else if (key == "guard") {
            cfg.window.guard = x;
            cfg.guard_set = true;
        } else {
            fail(ErrorCode::InvalidConfig, "unknown window key '" + key + "'");
        }
    }
}

} // namespace

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open config file '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::InvalidConfig,
             "config '" + path + "' is not valid JSON: " + e.what());
    }
    if (!root.is_object())
        fail(ErrorCode::InvalidConfig, "config root must be a JSON object");

    for (const auto& [key, v] : root.items()) {
        if (key == "params") {
            if (!v.is_object())
                fail(ErrorCode::InvalidConfig, "params must be an object");
            apply_params(v, cfg.params);
        } else if (key == "window") {
            if (!v.is_object())
                fail(ErrorCode::InvalidConfig, "window must be an object");
            apply_window(v, cfg);
        } else if (key == "strategy") {
            cfg.strategy = parse_strategy(v.get<std::string>());
        } else if (key == "trials") {
            cfg.trials = v.get<int>();
        } else if (key == "seed") {
            cfg.seed = v.get<uint64_t>();
        } else if (key == "lambda_b") {
            cfg.lambda_b = v.get<double>();
        } else if (key == "lambda_a_grid") {
            cfg.lambda_a_grid = grid_value(v, key);
        } else if (key == "open_prob_grid") {
            cfg.open_prob_grid = grid_value(v, key);
        } else if (key == "rows") {
            cfg.hex_rows = v.get<int>();
        } else if (key == "cols") {
            cfg.hex_cols = v.get<int>();
        } else if (key == "connectivity") {
            cfg.connectivity = parse_connectivity(v.get<int>());
        } else if (key == "crossing") {
            cfg.crossing = parse_crossing(v.get<std::string>());
        } else if (key == "out") {
            cfg.out_path = v.get<std::string>();
        } else if (key == "svg") {
            cfg.svg_path = v.get<std::string>();
        } else if (key == "pgm") {
            cfg.pgm = v.get<bool>();
        } else {
            fail(ErrorCode::InvalidConfig, "unknown config key '" + key + "'");
        }
    }
}

SharingStrategy parse_strategy(const std::string& name) {
    if (name == "none") return SharingStrategy::NoSharing;
    if (name == "active") return SharingStrategy::ActiveSharing;
    if (name == "passive") return SharingStrategy::PassiveSharing;
    fail(ErrorCode::InvalidConfig,
         "strategy must be none|active|passive, got '" + name + "'");
}

Connectivity parse_connectivity(int value) {
    if (value == 4) return Connectivity::Four;
    if (value == 8) return Connectivity::Eight;
    fail(ErrorCode::InvalidConfig, "connectivity must be 4 or 8");
}

CrossingAxis parse_crossing(const std::string& name) {
    if (name == "lr") return CrossingAxis::LeftRight;
    if (name == "both") return CrossingAxis::BothAxes;
    fail(ErrorCode::InvalidConfig, "crossing must be lr|both, got '" + name + "'");
}

} // namespace percell::cli
