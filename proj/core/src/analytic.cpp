#include "percell/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace percell {

namespace {

constexpr double kPi = std::numbers::pi;

PhaseVerdict verdict_from_margin(double margin) {
    if (std::abs(margin) <= critical_margin_tolerance())
        return {Phase::Critical, margin};
    return {margin > 0.0 ? Phase::Supercritical : Phase::Subcritical, margin};
}

// Coefficient of the interference term of F: 2 pi gamma beta lambda/(alpha-2).
double interference_coeff(double lambda, const SystemParams& p) {
    return 2.0 * kPi * p.gamma * p.beta() * lambda / (p.alpha - 2.0);
}

double closed_form_radius(double lambda, const SystemParams& p) {
    // alpha = 4: u = r^2 solves u^2/q + c'u = 1 with q = beta0/beta,
    // c' = pi gamma beta lambda. Written as u = q/(sqrt(c^2+q)+c),
    // c = pi gamma lambda beta0/2, to avoid cancellation at large c.
    double q = p.beta0() / p.beta();
    double c = kPi * p.gamma * lambda * p.beta0() / 2.0;
    double u = q / (std::sqrt(c * c + q) + c);
    return std::sqrt(u);
}

double bisect_radius(double lambda, const SystemParams& p) {
    // Unique root of the strictly increasing F on (0, cap): both caps have
    // F(cap) >= 1 (the corresponding term alone reaches 1).
    double cap = std::pow(p.beta0() / p.beta(), 1.0 / p.alpha);
    double icoeff = interference_coeff(lambda, p);
    if (icoeff > 0.0) cap = std::min(cap, std::sqrt(1.0 / icoeff));
    double lo = 0.0, hi = cap;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        double mid = 0.5 * (lo + hi);
        (f_ratio(mid, lambda, p) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double lambda_c1() { return 4.0 * std::numbers::ln2 / kPi; }

double critical_margin_tolerance() { return 1e-12 * lambda_c1(); }

double snr_radius(const SystemParams& p) {
    return std::pow(p.beta0() / p.beta(), 1.0 / p.alpha);
}

double f_ratio(double r, double lambda, const SystemParams& p) {
    return (p.beta() / p.beta0()) * std::pow(r, p.alpha) +
           interference_coeff(lambda, p) * r * r;
}

double avg_coverage_radius(double lambda, const SystemParams& p,
                           RadiusMethod method) {
    double r;
    if (p.gamma * lambda == 0.0) {
        r = snr_radius(p);  // no interference term; exact short-circuit
    } else {
        switch (method) {
            case RadiusMethod::ClosedForm: r = closed_form_radius(lambda, p); break;
            case RadiusMethod::Bisection: r = bisect_radius(lambda, p); break;
            case RadiusMethod::Auto:
                r = p.alpha == 4.0 ? closed_form_radius(lambda, p)
                                   : bisect_radius(lambda, p);
                break;
            default: r = bisect_radius(lambda, p); break;
        }
    }
    if (r <= 1.0) {
        std::ostringstream os;
        os << "average coverage radius " << r
           << " m is not above the 1 m near-field clamp (lambda = " << lambda
           << ")";
        fail(ErrorCode::RadiusBelowUnit, os.str());
    }
    return r;
}

std::pair<double, double> radius_bounds(double lambda, const SystemParams& p) {
    double f1 = f_ratio(1.0, lambda, p);
    if (f1 >= 1.0) {
        std::ostringstream os;
        os << "F(1, lambda) = " << f1
           << " >= 1: radius bounds require a root above 1 m";
        fail(ErrorCode::RadiusBelowUnit, os.str());
    }
    return {std::pow(f1, -1.0 / p.alpha), std::pow(f1, -0.5)};
}

std::optional<int> max_potential_serving(const SystemParams& p) {
    if (p.gamma == 0.0) return std::nullopt;
    double x = 1.0 / (p.beta() * p.gamma);
    // largest integer strictly below x
    double n = std::ceil(x) - 1.0;
    return int(std::max(0.0, n));
}

namespace {

double critical_density_shared_form(const SystemParams& p) {
    double bracket =
        1.0 - kPi * p.gamma * p.beta() * lambda_c1() / (2.0 * (p.alpha - 2.0));
    if (bracket <= 0.0) {
        std::ostringstream os;
        os << "interference bracket 1 - pi*gamma*beta*lc1/(2(alpha-2)) = "
           << bracket << " <= 0: critical density undefined by this formula";
        fail(ErrorCode::BracketNonPositive, os.str());
    }
    return lambda_c1() / 4.0 *
           std::pow(p.beta0() / p.beta() * bracket, -2.0 / p.alpha);
}

} // namespace

double critical_density_no_sharing(const SystemParams& p) {
    return critical_density_shared_form(p);
}

double critical_density_passive(const SystemParams& p) {
    return critical_density_shared_form(p);
}

PhaseVerdict phase_active(double lambda_a, double lambda_b,
                          const SystemParams& p) {
    double sum = 0.0;
    if (lambda_a > 0.0) {
        double ra = avg_coverage_radius(lambda_a, p);
        sum += lambda_a * ra * ra;
    }
    if (lambda_b > 0.0) {
        double rb = avg_coverage_radius(lambda_b, p);
        sum += lambda_b * rb * rb;
    }
    return verdict_from_margin(sum - lambda_c1() / 4.0);
}

Region restriction_region_active(double lambda_a, double lambda_b,
                                 const SystemParams& p) {
    double ra = avg_coverage_radius(lambda_a, p);
    double rb = avg_coverage_radius(lambda_b, p);
    double r2_lo = std::min(ra * ra, rb * rb);
    double r2_hi = std::max(ra * ra, rb * rb);
    double sum = lambda_a + lambda_b;
    if (sum < lambda_c1() / (4.0 * r2_hi)) return Region::BelowRegion;
    if (sum > lambda_c1() / (4.0 * r2_lo)) return Region::AboveRegion;
    return Region::InsideRegion;
}

double coverage_probability_gdm(double lambda, double radius) {
    return 1.0 - std::exp(-lambda * kPi * radius * radius);
}

PhaseVerdict coverage_to_phase(double p_cov) {
    if (!(p_cov >= 0.0 && p_cov <= 1.0)) {
        std::ostringstream os;
        os << "coverage probability " << p_cov << " outside [0,1]";
        fail(ErrorCode::OutOfRangeProbability, os.str());
    }
    return verdict_from_margin(p_cov - 0.5);
}

HexEnvelopes hex_envelopes(double side_a, double radius_r) {
    if (!(side_a > 0.0 && side_a < radius_r / 2.0)) {
        std::ostringstream os;
        os << "hexagon side " << side_a << " outside (0, r/2) for r = "
           << radius_r;
        fail(ErrorCode::SideLengthOutOfRange, os.str());
    }
    HexEnvelopes h;
    h.side_a = side_a;
    h.radius_r = radius_r;
    h.chord_b = std::sqrt(radius_r * radius_r - side_a * side_a / 4.0) -
                std::sqrt(3.0) / 2.0 * side_a;
    h.angle_theta = std::asin(h.chord_b / (2.0 * radius_r));
    h.s_in = 6.0 * h.angle_theta * radius_r * radius_r -
             3.0 * side_a * h.chord_b;
    h.s_out = 3.0 * std::sqrt(3.0) / 2.0 * side_a * side_a +
              kPi * radius_r * radius_r + 6.0 * side_a * radius_r;
    return h;
}

PhaseVerdict gdm_phase(const GilbertDisk& model) {
    double d = 2.0 * model.radius;
    return verdict_from_margin(model.lambda * d * d - lambda_c1());
}

} // namespace percell
