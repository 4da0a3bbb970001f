#include "specbound/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "specbound/errors.hpp"

namespace specbound::conformal {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void require_positive_a(double a) {
    if (!(a > 0.0)) throw domain_error("map parameter: require a > 0, got a = " + std::to_string(a));
}

std::string fmt(cdouble z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

cdouble sqrt_slit(cdouble lambda) {
    double theta = std::atan2(lambda.imag(), lambda.real());
    if (theta < 0.0) theta += kTwoPi;
    return std::polar(std::sqrt(std::abs(lambda)), 0.5 * theta);
}

double dist_to_ray(cdouble lambda) {
    if (lambda.real() >= 0.0) return std::abs(lambda.imag());
    return std::abs(lambda);
}

double dist_to_segment(cdouble w, cdouble p, cdouble q) {
    const cdouble d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(w - p);
    // projection parameter onto the segment, clamped to the endpoints
    double t = ((w.real() - p.real()) * d.real() + (w.imag() - p.imag()) * d.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(w - (p + t * d));
}

bool on_ray(cdouble lambda) {
    const double tol = 1e-14 * (1.0 + std::abs(lambda));
    return std::abs(lambda.imag()) <= tol && lambda.real() >= -tol;
}

cdouble phi(double a, cdouble z) {
    require_positive_a(a);
    if (!(std::abs(z) < 1.0 - 1e-14))
        throw domain_error("phi: require |z| < 1, got z = " + fmt(z));
    const cdouble r = (z + 1.0) / (z - 1.0);
    return -a * r * r;
}

cdouble phi_inv(double a, cdouble lambda) {
    require_positive_a(a);
    if (on_ray(lambda))
        throw domain_error("phi_inv: require lambda off the ray [0, inf), got lambda = " + fmt(lambda));
    const cdouble root = sqrt_slit(lambda);
    const cdouble isa = cdouble{0.0, std::sqrt(a)};
    return (root - isa) / (root + isa);
}

Interval distortion_disc(double a, cdouble z) {
    require_positive_a(a);
    const double r = std::abs(z);
    if (!(r < 1.0 - 1e-14))
        throw domain_error("distortion_disc: require |z| < 1, got z = " + fmt(z));
    const double core = a * (1.0 - r) * std::abs(z + 1.0) / std::pow(std::abs(z - 1.0), 3.0);
    return {core, 8.0 * core};
}

Interval distortion_ray(double a, cdouble lambda) {
    require_positive_a(a);
    if (on_ray(lambda))
        throw domain_error("distortion_ray: require lambda off the ray [0, inf), got lambda = " +
                           fmt(lambda));
    const double mod = std::abs(lambda);
    const double core = dist_to_ray(lambda) / (std::sqrt(mod) * (a + mod));
    const double sa = std::sqrt(a);
    return {0.25 * sa * core, 4.0 * sa * core};
}

GDistBound g_dist_bound(double a, cdouble lambda) {
    require_positive_a(a);
    if (std::abs(lambda + a) <= 1e-14 * (1.0 + std::abs(lambda)))
        throw domain_error("g_dist_bound: pole at lambda = -a, got lambda = " + fmt(lambda));
    const cdouble g = -1.0 / (a + lambda);
    const double actual = dist_to_segment(g, cdouble{-1.0 / a, 0.0}, cdouble{0.0, 0.0});
    const double am = a + std::abs(lambda);
    const double lower = dist_to_ray(lambda) / (2.0 * std::sqrt(5.0) * am * am);
    return {g, actual, lower};
}

}  // namespace specbound::conformal
