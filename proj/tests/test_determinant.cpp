#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "specbound/determinant.hpp"
#include "specbound/discretize.hpp"
#include "specbound/eigen.hpp"
#include "specbound/errors.hpp"
#include "specbound/matrix.hpp"

using specbound::domain_error;
using specbound::la::cdouble;
using specbound::la::CMatrix;
namespace det = specbound::determinant;
namespace dz = specbound::discretize;

namespace {

constexpr double kPi = std::numbers::pi;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

CMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double scale) {
    CMatrix a(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            a(i, j) = scale * cdouble(uniform01(rng) - 0.5,
                                      uniform01(rng) - 0.5);
    return a;
}

}  // namespace

TEST_CASE("regularization order and growth constants") {
    CHECK(det::reg_det_order(1.0) == 1);
    CHECK(det::reg_det_order(2.0) == 2);
    CHECK(det::reg_det_order(2.1) == 3);
    CHECK(det::reg_det_order(0.5) == 1);
    CHECK(det::default_gamma(1) == 1.0);
    CHECK(det::default_gamma(2) == 0.5);
    CHECK(det::default_gamma(3) ==
          doctest::Approx(std::exp(1.0) * (2.0 + std::log(3.0))));
    CHECK_THROWS_AS(det::default_gamma(0), domain_error);
}

TEST_CASE("regularized determinant closed forms") {
    CHECK(det::det_regularized(2, {cdouble(0.5, 0.0)}).real() ==
          doctest::Approx(0.5 * std::exp(0.5)).epsilon(1e-14));
    CHECK(std::abs(det::det_regularized(3, {}) - cdouble(1.0)) == 0.0);
    CHECK(det::det_regularized(1, {cdouble(0.5), cdouble(-1.0)}).real() ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(det::det_regularized(4, {cdouble(1.0)})) == 0.0);

    // Direct product evaluation as an independent route for n = 3.
    const cdouble z(0.3, 0.4);
    const cdouble direct = (1.0 - z) * std::exp(z + 0.5 * z * z);
    CHECK(std::abs(det::det_regularized(3, {z}) - direct) <= 1e-14);
}

TEST_CASE("order one equals the plain determinant") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const CMatrix a = random_matrix(rng, 6, 0.8);
        CMatrix ima = specbound::la::CMatrix::identity(6);
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t i = 0; i < 6; ++i) ima(i, j) -= a(i, j);
        const cdouble lu = specbound::la::lu_det(specbound::la::lu_factor(ima));
        const cdouble reg =
            det::det_regularized(1, specbound::eigen::eig(a).eigenvalues);
        CHECK(std::abs(reg - lu) <= 1e-9 * std::abs(lu));
    }
}

TEST_CASE("growth bound on random contractions") {
    std::mt19937_64 rng(7);
    for (int n : {1, 2, 3}) {
        const double gamma = det::default_gamma(n);
        for (int trial = 0; trial < 25; ++trial) {
            CMatrix a = random_matrix(rng, 8, 1.0);
            const double top = dz::schatten_norm(a, dz::schatten_inf);
            const double scale = 0.9 / top;
            for (std::size_t j = 0; j < 8; ++j)
                for (std::size_t i = 0; i < 8; ++i) a(i, j) *= scale;
            const det::GrowthCheck gc = det::det_growth_check(n, a, gamma);
            CHECK(gc.lhs <= gc.rhs * (1.0 + 1e-12));
        }
    }

    CMatrix neg(1, 1);
    neg(0, 0) = -1.0;
    const det::GrowthCheck gc = det::det_growth_check(1, neg, 1.0);
    CHECK(gc.lhs == doctest::Approx(2.0));
    CHECK(gc.rhs == doctest::Approx(std::exp(1.0)));

    const det::GrowthCheck zero =
        det::det_growth_check(2, CMatrix(4, 4), 0.5);
    CHECK(zero.lhs == doctest::Approx(1.0));
    CHECK(zero.rhs == doctest::Approx(1.0));
}

TEST_CASE("perturbation determinant is one for zero potential") {
    const dz::Grid g(1, 8, 2.0 * kPi);
    const det::FLambda f(g, 1.0, 2.0, dz::Potential::constant(g, 0.0), 2.0);
    for (cdouble lam : {cdouble(-1.0, 0.0), cdouble(0.5, 2.0),
                        cdouble(-3.0, -0.2)}) {
        CHECK(std::abs(f(lam) - 1.0) <= 1e-12);
    }
    CHECK_THROWS_AS(f(cdouble(1.0, 0.0)), domain_error);
}

TEST_CASE("perturbation determinant normalizes at minus a") {
    const dz::Grid g(1, 8, 2.0 * kPi);
    dz::PotentialSpec spec;
    spec.kind = dz::PotentialKind::gaussian;
    spec.amplitude = cdouble(0.4, 0.3);
    spec.width = 1.0;
    const dz::Potential v(g, spec);
    const det::FLambda f(g, 1.0, 2.0, v, 2.0);
    CHECK(std::abs(f(cdouble(-2.0, 0.0)) - 1.0) <= 1e-12);
}

TEST_CASE("determinant zeros match eigenvalues with multiplicity") {
    // Constant potential ci shifts the multiplier spectrum {0,1,1,4,4,9,9,16}
    // off the axis, keeping exact double eigenvalues.
    const dz::Grid g(1, 8, 2.0 * kPi);
    const cdouble c(0.0, 0.4);
    const dz::Potential v = dz::Potential::constant(g, c);
    const det::FLambda f(g, 1.0, 2.0, v, 2.0);

    const auto winding = [&f](cdouble center, double radius) {
        double angle = 0.0;
        cdouble prev = f(center + radius);
        for (int j = 1; j <= 64; ++j) {
            const double t = 2.0 * kPi * j / 64.0;
            const cdouble cur = f(center + radius * std::polar(1.0, t));
            angle += std::arg(cur / prev);
            prev = cur;
        }
        return static_cast<int>(std::lround(angle / (2.0 * kPi)));
    };

    CHECK(winding(c + 1.0, 0.2) == 2);
    CHECK(winding(c + 0.0, 0.2) == 1);
    CHECK(winding(c + 16.0, 0.2) == 1);
    CHECK(winding(c + cdouble(2.5, 0.0), 0.2) == 0);

    // |f| at an eigenvalue collapses relative to a reference circle.
    double sup = 0.0;
    for (int j = 0; j < 32; ++j)
        sup = std::max(sup, std::abs(f(c + 1.0 + std::polar(0.5, 2.0 * kPi * j / 32.0))));
    CHECK(std::abs(f(c + 1.0)) <= 1e-6 * sup);
}

TEST_CASE("log determinant obeys the schatten chain") {
    const dz::Grid g(1, 16, 9.0);
    const double s = 0.7;
    const double p = 2.0;
    dz::PotentialSpec spec;
    spec.kind = dz::PotentialKind::gaussian;
    spec.amplitude = cdouble(0.6, -0.8);
    spec.width = 1.3;
    const dz::Potential v(g, spec);
    const dz::OmegaData om = dz::find_omega(g, s, v);
    const double a = 2.0 * om.omega;
    const det::FLambda f(g, s, p, v, a);
    const double gamma = det::default_gamma(f.order());
    for (cdouble lam : {cdouble(-1.0, 0.5), cdouble(-2.0, 0.0),
                        cdouble(0.0, 3.0), cdouble(0.3, -0.7)}) {
        const double bs = dz::bs_check(g, s, p, v, lam).lhs;
        const double bound = gamma *
                             std::pow(om.c_omega * std::abs(lam + a) /
                                          std::abs(om.omega - a),
                                      p) *
                             bs;
        CHECK(std::log(std::abs(f(lam))) <= bound + 1e-9);
    }
}

TEST_CASE("far field determinant stays near one") {
    const dz::Grid g(1, 16, 9.0);
    dz::PotentialSpec spec;
    spec.kind = dz::PotentialKind::gaussian;
    spec.amplitude = cdouble(0.05, 0.02);
    spec.width = 1.0;
    const dz::Potential v(g, spec);
    const double sup = v.sup_norm();
    const det::FLambda f(g, 1.0, 2.0, v, 2.0);
    for (cdouble lam : {cdouble(-10.0 * sup - 1.0, 0.0), cdouble(-2.0, 4.0)}) {
        CHECK(std::abs(f(lam) - 1.0) <= 0.5);
    }
}
