#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "specbound/bgk.hpp"
#include "specbound/conformal.hpp"
#include "specbound/determinant.hpp"
#include "specbound/discretize.hpp"
#include "specbound/eigen.hpp"
#include "specbound/errors.hpp"

using specbound::domain_error;
using specbound::validation_error;
namespace bgk = specbound::bgk;
namespace dz = specbound::discretize;
using bgk::cdouble;

namespace {

constexpr double kPi = std::numbers::pi;

// Finite Blaschke product with the given zeros, normalized to h(0) = 1.
cdouble blaschke(const std::vector<cdouble>& zeros, cdouble z) {
    cdouble value = 1.0;
    for (const cdouble& w : zeros)
        value *= (w - z) / ((1.0 - std::conj(w) * z) * w);
    return value;
}

}  // namespace

TEST_CASE("zero sum closed forms") {
    CHECK(bgk::bgk_sum({cdouble(0.9, 0.0)}, 0.0, 0.5, {}) ==
          doctest::Approx(std::pow(0.1, 1.5)).epsilon(1e-12));
    CHECK(bgk::bgk_sum({}, 1.0, 0.5, {}) == 0.0);
    CHECK(bgk::bgk_sum({cdouble(0.5, 0.0)}, 0.0, 0.5,
                       {{cdouble(1.0, 0.0), 2.0}}) ==
          doctest::Approx(0.125).epsilon(1e-12));

    CHECK_THROWS_AS(bgk::bgk_sum({cdouble(1.0, 0.0)}, 0.0, 0.5, {}),
                    domain_error);
    CHECK_THROWS_AS(bgk::bgk_sum({cdouble(1.1, 0.0)}, 0.0, 0.5, {}),
                    domain_error);
    CHECK_THROWS_AS(bgk::bgk_sum({cdouble(0.5, 0.0)}, 0.0, 1.5, {}),
                    domain_error);
    CHECK_THROWS_AS(bgk::bgk_sum({cdouble(0.5, 0.0)}, 0.0, 0.5,
                                 {{cdouble(0.9, 0.0), 1.0}}),
                    domain_error);
}

TEST_CASE("zero sum nonincreasing in tau when boundary terms clamp") {
    const std::vector<cdouble> zeros{cdouble(0.3, 0.2), cdouble(-0.5, 0.4),
                                     cdouble(0.0, -0.8)};
    const std::vector<bgk::BoundaryPoint> boundary{{cdouble(1.0, 0.0), 0.3}};
    double prev = bgk::bgk_sum(zeros, 0.7, 0.1, boundary);
    for (double tau : {0.2, 0.3, 0.5, 0.65}) {
        const double cur = bgk::bgk_sum(zeros, 0.7, tau, boundary);
        CHECK(cur <= prev * (1.0 + 1e-14));
        prev = cur;
    }
}

TEST_CASE("envelope estimate on closed-form functions") {
    CHECK(bgk::envelope_estimate([](cdouble) { return cdouble(1.0); }, 0.0,
                                 {}) == 0.0);

    // Normalized pole: |exp(1/(1-z) - 1)| <= exp(1/(1-|z|)), saturated along
    // the positive radius where the estimate reaches sup r = 0.99.
    const double k_pole = bgk::envelope_estimate(
        [](cdouble z) { return std::exp(1.0 / (1.0 - z) - 1.0); }, 1.0,
        {{cdouble(1.0, 0.0), 0.0}});
    CHECK(k_pole <= 1.0 + 1e-9);
    CHECK(k_pole >= 0.9);

    const double k_blaschke = bgk::envelope_estimate(
        [](cdouble z) { return blaschke({cdouble(0.9, 0.0)}, z); }, 0.0, {});
    CHECK(k_blaschke <= std::log(1.0 / 0.9) + 1e-9);

    CHECK_THROWS_AS(
        bgk::envelope_estimate([](cdouble) { return cdouble(2.0); }, 0.0, {}),
        validation_error);
}

TEST_CASE("blaschke family keeps the sum-to-envelope ratio bounded") {
    for (double r : {0.5, 0.9, 0.99, 0.999}) {
        for (int count : {1, 5, 20}) {
            std::vector<cdouble> zeros;
            for (int j = 0; j < count; ++j)
                zeros.push_back(std::polar(r, 2.0 * kPi * j / count + 0.3));
            const double k_est = bgk::envelope_estimate(
                [&zeros](cdouble z) { return blaschke(zeros, z); }, 0.0, {});
            const double sum = bgk::bgk_sum(zeros, 0.0, 0.3, {});
            REQUIRE(k_est > 0.0);
            CHECK(sum / k_est <= 10.0);
        }
    }
}

TEST_CASE("envelope parameters for the determinant transplant") {
    // d/s - p + 1 = 1 and p - d/s + 1 = 1: nothing clamps.
    const bgk::GrowthEnvelope flat =
        bgk::lt_envelope(1, 0.5, 2.0, 2.0, 1.0, 1.0, 1.0);
    CHECK(flat.alpha == doctest::Approx(1.0));
    REQUIRE(flat.boundary.size() == 2);
    CHECK(flat.boundary[0].zeta == cdouble(1.0, 0.0));
    CHECK(flat.boundary[0].beta == doctest::Approx(1.0));
    CHECK(flat.boundary[1].zeta == cdouble(-1.0, 0.0));
    CHECK(flat.boundary[1].beta == doctest::Approx(1.0));

    // s > d/2: alpha = p - d/2s, raw exponent 3d/2s - p = -1/2 clamps and
    // the amplitude picks up the 2^{1/2} compensation.
    const bgk::GrowthEnvelope steep =
        bgk::lt_envelope(1, 1.0, 2.0, 2.0, 1.0, 1.0, 1.0);
    CHECK(steep.alpha == doctest::Approx(1.5));
    CHECK(steep.boundary[0].beta == 0.0);
    CHECK(steep.boundary[1].beta == doctest::Approx(1.5));
    const bgk::GrowthEnvelope steep2 =
        bgk::lt_envelope(1, 1.0, 2.0, 2.0, 1.0, 1.0, 2.0);
    CHECK(steep2.k == doctest::Approx(steep.k * 4.0).epsilon(1e-12));

    CHECK_THROWS_AS(bgk::lt_envelope(1, 0.5, 2.0, 1.0, 1.0, 1.0, 1.0),
                    domain_error);
    CHECK_THROWS_AS(bgk::lt_envelope(1, 0.5, 2.0, 2.0, 0.5, 1.0, 1.0),
                    domain_error);

    // Amplitude scales as ||V||^p and decays in a through |omega - a|^p.
    const bgk::GrowthEnvelope far =
        bgk::lt_envelope(1, 0.5, 2.0, 8.0, 1.0, 1.0, 1.0);
    CHECK(far.k == doctest::Approx(flat.k * 4.0 / 49.0).epsilon(1e-12));
}

TEST_CASE("envelope log bound blows up toward the boundary") {
    bgk::GrowthEnvelope env;
    env.k = 2.0;
    env.alpha = 1.0;
    env.boundary = {{cdouble(1.0, 0.0), 0.5}};
    const double mid = bgk::envelope_log_bound(env, cdouble(0.0, 0.0));
    CHECK(mid == doctest::Approx(2.0));
    CHECK(bgk::envelope_log_bound(env, cdouble(0.9, 0.0)) > 10.0 * mid);
    CHECK_THROWS_AS(bgk::envelope_log_bound(env, cdouble(1.0, 0.0)),
                    domain_error);
}

TEST_CASE("transplanted determinant satisfies its envelope") {
    const dz::Grid g(1, 16, 9.0);
    const double s = 0.5;
    const double p = 2.0;
    dz::PotentialSpec spec;
    spec.kind = dz::PotentialKind::gaussian;
    spec.amplitude = cdouble(0.0, 0.1);
    spec.width = 1.0;
    const dz::Potential v(g, spec);
    const dz::OmegaData om = dz::find_omega(g, s, v);
    const double a = 2.0 * om.omega;
    const bgk::GrowthEnvelope env =
        bgk::lt_envelope(1, s, p, a, om.omega, om.c_omega, v.lp_norm(p));

    const specbound::determinant::FLambda f(g, s, p, v, a);
    const auto transplant = [&f, a](cdouble z) {
        return f(specbound::conformal::phi(a, z));
    };

    bgk::SampleSpec samples;
    samples.radii = {0.1, 0.3, 0.5, 0.7, 0.9, 0.95};
    samples.angles = 64;
    const double k_est =
        bgk::envelope_estimate(transplant, env.alpha, env.boundary, samples);
    CHECK(k_est <= env.k);

    // Envelope inequality pointwise on a separate probe set.
    for (double r : {0.25, 0.6, 0.85}) {
        for (int j = 0; j < 16; ++j) {
            const cdouble z = std::polar(r, 2.0 * kPi * (j + 0.37) / 16.0);
            const double lhs = std::log(std::abs(transplant(z)));
            CHECK(lhs <= bgk::envelope_log_bound(env, z) + 1e-9);
        }
    }

    // Zeros transplanted from the certified spectrum feed the zero sum.
    const auto h = dz::assemble_h(g, s, v);
    const auto eigres = specbound::eigen::eig(h.matrix);
    std::vector<cdouble> zeros;
    for (const cdouble& lam : eigres.eigenvalues) {
        if (specbound::conformal::dist_to_ray(lam) > 1e-10)
            zeros.push_back(specbound::conformal::phi_inv(a, lam));
    }
    REQUIRE(!zeros.empty());
    for (const cdouble& z : zeros) CHECK(std::abs(z) < 1.0);
    const double sum = bgk::bgk_sum(zeros, env.alpha, 0.1, env.boundary);
    CHECK(sum >= 0.0);
    CHECK(sum <= 100.0 * env.k);
}
