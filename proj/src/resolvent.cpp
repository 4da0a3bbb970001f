#include "specbound/resolvent.hpp"

#include <cmath>
#include <string>

#include "specbound/conformal.hpp"
#include "specbound/errors.hpp"
#include "specbound/numerics.hpp"

namespace specbound::resolvent {

namespace num = specbound::numerics;

namespace {

void require_params(int d, double s, double p) {
    if (d < 1) throw domain_error("resolvent: require d >= 1, got d = " + std::to_string(d));
    if (!(s > 0.0)) throw domain_error("resolvent: require s > 0, got s = " + std::to_string(s));
    if (!(p > 0.0)) throw domain_error("resolvent: require p > 0, got p = " + std::to_string(p));
}

}  // namespace

double lp_norm_direct(int d, double s, double p, cdouble lambda, double tol) {
    require_params(d, s, p);
    const double half_order = 0.5 * d / s;  // d/2s
    if (!(p > half_order))
        throw domain_error("lp_norm_direct: require p > d/2s for tail convergence, got p = " +
                           std::to_string(p) + ", d/2s = " + std::to_string(half_order));
    if (conformal::on_ray(lambda))
        throw domain_error("lp_norm_direct: lambda on the essential spectrum [0, inf)");

    // Rescale r = |lambda|^{1/2s} rho, so the near-resonance radius sits at
    // rho = 1 and the integrand peak is where the quadrature splits.
    const double mod = std::abs(lambda);
    const double re = lambda.real() / mod, im = lambda.imag() / mod;
    const auto integrand = [=](double rho) {
        const double m = std::pow(rho, 2.0 * s);
        const double dist2 = (m - re) * (m - re) + im * im;
        return std::pow(rho, d - 1.0) * std::pow(dist2, -0.5 * p);
    };
    const double decay = 2.0 * s * p - d + 1.0;  // > 1 iff p > d/2s
    const auto q = num::quad_semiinfinite(integrand, decay, tol);
    return num::sphere_area(d) * std::pow(mod, half_order - p) * q.value;
}

ResolventConstants constants(int d, double s, double p) {
    require_params(d, s, p);
    const double half_order = 0.5 * d / s;
    if (!(p > 1.0) || !(p > half_order))
        throw domain_error("constants: require p > max(1, d/2s), got p = " + std::to_string(p) +
                           ", d/2s = " + std::to_string(half_order));
    ResolventConstants c;
    c.delta = half_order - 1.0;
    c.c_ds = std::max(1.0, std::pow(2.0, c.delta - 1.0));
    c.c_prime_ds = std::max(1.0, std::pow(2.0, 1.0 - c.delta));
    const double i_plain = num::integral_algebraic(0.0, p);
    const double i_delta = num::integral_algebraic(c.delta, p);
    c.k1 = std::max((1.0 + c.c_ds) * i_plain, c.c_ds * i_delta);
    c.k2 = c.k1 * c.c_prime_ds * std::pow(2.0, 0.5 * c.delta);
    c.k3 = 1.0 / (c.delta + 1.0) + 2.0 * i_plain;
    c.m1 = std::max(c.k2, i_delta);
    if (c.delta > -1.0 && c.delta < 0.0) c.n1 = std::max(i_delta, c.k3);
    return c;
}

double bound_br(int d, double s, double p, cdouble lambda) {
    require_params(d, s, p);
    if (s > 0.5 * d)
        throw domain_error("bound_br: regime requires s <= d/2 (got s = " + std::to_string(s) +
                           ", d = " + std::to_string(d) + "); use bound_br1 for s > d/2");
    const double half_order = 0.5 * d / s;
    if (!(p > half_order))
        throw domain_error("bound_br: require p > d/2s, got p = " + std::to_string(p));
    if (conformal::on_ray(lambda)) throw domain_error("bound_br: lambda on the ray [0, inf)");
    const auto c = constants(d, s, p);
    const double dist = conformal::dist_to_ray(lambda);
    return num::sphere_area(d) / (2.0 * s) * c.m1 * std::pow(std::abs(lambda), half_order - 1.0) /
           std::pow(dist, p - 1.0);
}

double bound_br1(int d, double s, double p, cdouble lambda) {
    require_params(d, s, p);
    if (!(s > 0.5 * d))
        throw domain_error("bound_br1: regime requires s > d/2 (got s = " + std::to_string(s) +
                           ", d = " + std::to_string(d) + "); use bound_br for s <= d/2");
    if (!(p > 1.0)) throw domain_error("bound_br1: require p > 1, got p = " + std::to_string(p));
    if (conformal::on_ray(lambda)) throw domain_error("bound_br1: lambda on the ray [0, inf)");
    const auto c = constants(d, s, p);
    const double half_order = 0.5 * d / s;
    const double dist = conformal::dist_to_ray(lambda);
    return num::sphere_area(d) / (2.0 * s) * c.n1.value() / std::pow(dist, p - half_order);
}

}  // namespace specbound::resolvent
