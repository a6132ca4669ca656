#pragma once

#include <optional>
#include <utility>

#include "percell/params.hpp"

namespace percell {

// Boolean model of radius-r disks on a PPP of density lambda.
struct GilbertDisk {
    double lambda = 0.0;  // BSs/m^2
    double radius = 1.0;  // m
};

enum class Phase { Subcritical, Critical, Supercritical };

// margin is the signed distance from the critical surface in the units of the
// predicate that produced it; |margin| <= critical_margin_tolerance() maps to
// Critical (ties toward Critical).
struct PhaseVerdict {
    Phase phase = Phase::Subcritical;
    double margin = 0.0;
};

enum class Region { BelowRegion, InsideRegion, AboveRegion };

// Inner/outer hexagon envelopes of a coverage disk of radius r built from
// hexagons of side a: the inner envelope keeps the six circular caps that fit
// entirely inside covered hexagons, the outer one adds the hexagon ring.
struct HexEnvelopes {
    double side_a = 0.0;       // hexagon side [m]
    double radius_r = 0.0;     // coverage radius [m]
    double chord_b = 0.0;      // auxiliary chord length [m]
    double angle_theta = 0.0;  // cap half-angle [rad]
    double s_in = 0.0;         // inner envelope area [m^2]
    double s_out = 0.0;        // outer envelope area [m^2]
};

// Critical value of lambda*(2r)^2 for the Gilbert disk model, 4*ln2/pi.
double lambda_c1();

// Absolute tolerance on phase margins below which a verdict is Critical.
double critical_margin_tolerance();

// (beta0/beta)^(1/alpha): the noise-limited coverage radius.
double snr_radius(const SystemParams& p);

// F(r, lambda) = (beta/beta0) r^alpha + (2 pi gamma beta lambda/(alpha-2)) r^2.
// Strictly increasing in r and lambda; the average coverage radius is its
// unique unit level set.
double f_ratio(double r, double lambda, const SystemParams& p);

enum class RadiusMethod { Auto, ClosedForm, Bisection };

// Unique r with F(r, lambda) = 1. Auto uses the alpha=4 closed form
//   r = sqrt(sqrt((pi gamma lambda beta0/2)^2 + beta0/beta)
//            - pi gamma lambda beta0/2)
// and falls back to bisection otherwise. gamma*lambda = 0 short-circuits to
// snr_radius exactly. Throws RadiusBelowUnit if the root is <= 1 m.
double avg_coverage_radius(double lambda, const SystemParams& p,
                           RadiusMethod method = RadiusMethod::Auto);

// (F(1,lambda)^(-1/alpha), F(1,lambda)^(-1/2)); requires F(1,lambda) < 1.
std::pair<double, double> radius_bounds(double lambda, const SystemParams& p);

// Largest integer strictly below 1/(beta*gamma), clamped at 0; nullopt when
// gamma = 0 (no interference bound on potential servers).
std::optional<int> max_potential_serving(const SystemParams& p);

// (lc1/4) * (beta0/beta * (1 - pi gamma beta lc1 / (2(alpha-2))))^(-2/alpha).
// Throws BracketNonPositive when the inner bracket is <= 0.
double critical_density_no_sharing(const SystemParams& p);

// Same expression, interpreted as a threshold on lambda_a + lambda_b.
double critical_density_passive(const SystemParams& p);

// lambda_a r_a^2 + lambda_b r_b^2 vs lc1/4, r_x = avg_coverage_radius(x).
PhaseVerdict phase_active(double lambda_a, double lambda_b,
                          const SystemParams& p);

// Classifies lambda_a + lambda_b against the band
// ( lc1/(4 max(ra,rb)^2), lc1/(4 min(ra,rb)^2) ).
Region restriction_region_active(double lambda_a, double lambda_b,
                                 const SystemParams& p);

// 1 - exp(-lambda pi r^2): coverage probability of the Boolean disk model.
double coverage_probability_gdm(double lambda, double radius);

// Supercritical iff p_cov > 1/2 (margin = p_cov - 1/2).
PhaseVerdict coverage_to_phase(double p_cov);

// Requires 0 < side_a < radius_r/2; s_in < pi r^2 < s_out always holds.
HexEnvelopes hex_envelopes(double side_a, double radius_r);

// margin = lambda*(2r)^2 - lambda_c1.
PhaseVerdict gdm_phase(const GilbertDisk& model);

} // namespace percell
