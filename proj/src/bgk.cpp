#include "specbound/bgk.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "specbound/determinant.hpp"
#include "specbound/errors.hpp"
#include "specbound/numerics.hpp"
#include "specbound/resolvent.hpp"

namespace specbound::bgk {
namespace {

constexpr double kPi = std::numbers::pi;

void validate_boundary(const std::vector<BoundaryPoint>& boundary) {
    for (const BoundaryPoint& b : boundary) {
        if (std::abs(std::abs(b.zeta) - 1.0) > 1e-12)
            throw domain_error("boundary point must lie on the unit circle");
        if (!(b.beta >= 0.0))
            throw domain_error("boundary exponent must be >= 0");
    }
}

}  // namespace

double envelope_log_bound(const GrowthEnvelope& env, cdouble z) {
    const double margin = 1.0 - std::abs(z);
    if (!(margin > 0.0))
        throw domain_error("envelope_log_bound: z must lie inside the disc");
    double value = env.k * std::pow(margin, -env.alpha);
    for (const BoundaryPoint& b : env.boundary)
        value *= std::pow(std::abs(z - b.zeta), -b.beta);
    return value;
}

double bgk_sum(const std::vector<cdouble>& zeros, double alpha, double tau,
               const std::vector<BoundaryPoint>& boundary) {
    if (!(alpha >= 0.0)) throw domain_error("bgk_sum: alpha must be >= 0");
    if (!(tau > 0.0 && tau < 1.0))
        throw domain_error("bgk_sum: tau must lie in (0, 1)");
    validate_boundary(boundary);
    double sum = 0.0;
    for (const cdouble& z : zeros) {
        const double margin = 1.0 - std::abs(z);
        if (!(margin > 0.0))
            throw domain_error("bgk_sum: zero on or outside the unit circle");
        double term = std::pow(margin, alpha + 1.0 + tau);
        for (const BoundaryPoint& b : boundary) {
            const double expo = numerics::pospart(b.beta - 1.0 + tau);
            if (expo > 0.0) term *= std::pow(std::abs(z - b.zeta), expo);
        }
        sum += term;
    }
    return sum;
}

SampleSpec default_samples() {
    SampleSpec spec;
    spec.radii = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
    spec.angles = 256;
    return spec;
}

double envelope_estimate(const std::function<cdouble(cdouble)>& h,
                         double alpha,
                         const std::vector<BoundaryPoint>& boundary,
                         const SampleSpec& samples) {
    if (!(alpha >= 0.0))
        throw domain_error("envelope_estimate: alpha must be >= 0");
    validate_boundary(boundary);
    if (samples.angles < 1 || samples.radii.empty())
        throw domain_error("envelope_estimate: empty sample spec");
    if (std::abs(h(cdouble(0.0)) - 1.0) > 1e-9)
        throw validation_error("envelope_estimate: h(0) must equal 1");
    double k_est = 0.0;
    for (double r : samples.radii) {
        if (!(r > 0.0 && r < 1.0))
            throw domain_error("envelope_estimate: radii must lie in (0, 1)");
        for (int j = 0; j < samples.angles; ++j) {
            const cdouble z =
                std::polar(r, 2.0 * kPi * j / samples.angles);
            const double lh = std::log(std::abs(h(z)));
            if (!(lh > 0.0)) continue;
            double weight = std::pow(1.0 - r, alpha);
            for (const BoundaryPoint& b : boundary)
                weight *= std::pow(std::abs(z - b.zeta), b.beta);
            k_est = std::max(k_est, lh * weight);
        }
    }
    return k_est;
}

GrowthEnvelope lt_envelope(int d, double s, double p, double a, double omega,
                           double c_omega, double v_norm_p) {
    if (!(omega >= 1.0)) throw domain_error("lt_envelope: omega must be >= 1");
    if (!(a > omega)) throw domain_error("lt_envelope: requires a > omega");
    if (!(c_omega >= 1.0))
        throw domain_error("lt_envelope: C_omega must be >= 1");
    if (!(v_norm_p >= 0.0))
        throw domain_error("lt_envelope: potential norm must be >= 0");
    const resolvent::ResolventConstants rc = resolvent::constants(d, s, p);
    const double gamma =
        determinant::default_gamma(determinant::reg_det_order(p));
    const double prefactor = gamma / std::pow(2.0 * kPi, d) *
                             numerics::sphere_area(d) / (2.0 * s);
    const double half_ratio = d / (2.0 * s);

    GrowthEnvelope env;
    double beta_plus = 0.0;
    double beta_minus = 0.0;
    double k_base = 0.0;
    if (s <= 0.5 * d) {
        const double k1 = prefactor * rc.m1;
        k_base = std::pow(4.0, p) * k1 * std::pow(c_omega, p);
        env.alpha = p - 1.0;
        beta_plus = d / s - p + 1.0;
        beta_minus = p - d / s + 1.0;
    } else {
        const double k4 = prefactor * rc.n1.value();
        k_base = std::pow(4.0, p) * k4 * std::pow(c_omega, p);
        env.alpha = p - half_ratio;
        beta_plus = 3.0 * half_ratio - p;
        beta_minus = p - half_ratio;
    }
    env.k = k_base * std::pow(a, half_ratio) /
            std::pow(std::abs(omega - a), p) * std::pow(v_norm_p, p);
    // A clamped-away exponent c < 0 costs at most 2^{-c} on |z-zeta|^{-c}.
    env.k *= std::pow(2.0, numerics::pospart(-beta_plus));
    env.k *= std::pow(2.0, numerics::pospart(-beta_minus));
    env.boundary = {{cdouble(1.0, 0.0), numerics::pospart(beta_plus)},
                    {cdouble(-1.0, 0.0), numerics::pospart(beta_minus)}};
    return env;
}

}  // namespace specbound::bgk
