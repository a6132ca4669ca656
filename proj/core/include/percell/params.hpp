#pragma once

#include "percell/error.hpp"

namespace percell {

// Radio and percolation parameters of the downlink SINR model
//
//   SINR_i(z) = Pt * l(x_i - z) / (N0 + gamma * sum_{j != i} Pt * l(x_j - z))
//
// with deterministic path loss l(x) = 1 for ||x|| <= 1 m, ||x||^-alpha
// otherwise. dB values are stored as given; only the ratio beta0 = Pt/N0 is
// physically meaningful (no absolute power reference is ever needed).
// Distances are meters, densities BSs/m^2.
struct SystemParams {
    double pt_db = 13.0;    // received power at unit distance [dB]
    double n0_db = -104.0;  // noise power [dB]
    double beta_db = -3.0;  // SINR threshold [dB]
    double gamma = 1.0;     // interference cancellation factor, in [0,1]
    double alpha = 4.0;     // path loss exponent, > 2

    double pt() const;     // linear
    double n0() const;     // linear
    double beta() const;   // linear SINR threshold
    double beta0() const;  // Pt/N0, linear
};

struct ValidationReport {
    double beta_gamma = 0.0;
    // beta*gamma < 1 is necessary for percolation; >= 1 is a reportable state,
    // not a constructor error (analytic predicates stay evaluable).
    bool percolation_possible = false;
};

enum class SharingStrategy { NoSharing, ActiveSharing, PassiveSharing };

const char* to_string(SharingStrategy s);

double db_to_linear(double x_db);

// Throws Error{OutOfRangeGamma, AlphaNotGreaterThanTwo, NoiseDominatesSignal}
// on hard invariant violations; otherwise reports the beta*gamma state.
ValidationReport validate(const SystemParams& p);

} // namespace percell
