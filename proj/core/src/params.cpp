#include "percell/params.hpp"

#include <cmath>
#include <sstream>

namespace percell {

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double SystemParams::pt() const { return db_to_linear(pt_db); }
double SystemParams::n0() const { return db_to_linear(n0_db); }
double SystemParams::beta() const { return db_to_linear(beta_db); }
double SystemParams::beta0() const { return db_to_linear(pt_db - n0_db); }

const char* to_string(SharingStrategy s) {
    switch (s) {
        case SharingStrategy::NoSharing: return "none";
        case SharingStrategy::ActiveSharing: return "active";
        case SharingStrategy::PassiveSharing: return "passive";
    }
    return "?";
}

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::OutOfRangeGamma: return "OutOfRangeGamma";
        case ErrorCode::AlphaNotGreaterThanTwo: return "AlphaNotGreaterThanTwo";
        case ErrorCode::NoiseDominatesSignal: return "NoiseDominatesSignal";
        case ErrorCode::RadiusBelowUnit: return "RadiusBelowUnit";
        case ErrorCode::BracketNonPositive: return "BracketNonPositive";
        case ErrorCode::SideLengthOutOfRange: return "SideLengthOutOfRange";
        case ErrorCode::OutOfRangeProbability: return "OutOfRangeProbability";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::InvalidSweep: return "InvalidSweep";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoError: return "IoError";
    }
    return "?";
}

ValidationReport validate(const SystemParams& p) {
    if (!(p.gamma >= 0.0 && p.gamma <= 1.0)) {
        std::ostringstream os;
        os << "gamma must lie in [0,1], got " << p.gamma;
        fail(ErrorCode::OutOfRangeGamma, os.str());
    }
    if (!(p.alpha > 2.0)) {
        std::ostringstream os;
        os << "path loss exponent must exceed 2, got " << p.alpha;
        fail(ErrorCode::AlphaNotGreaterThanTwo, os.str());
    }
    if (!(p.beta0() > p.beta())) {
        std::ostringstream os;
        os << "Pt/N0 = " << p.beta0() << " does not exceed beta = " << p.beta();
        fail(ErrorCode::NoiseDominatesSignal, os.str());
    }
    ValidationReport report;
    report.beta_gamma = p.beta() * p.gamma;
    report.percolation_possible = report.beta_gamma < 1.0;
    return report;
}

} // namespace percell
