#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "specbound/conformal.hpp"
#include "specbound/errors.hpp"

namespace cf = specbound::conformal;
using cf::cdouble;

namespace {

constexpr double kPi = 3.14159265358979323846;

// golden-angle spiral: low-discrepancy points filling the disc
std::vector<cdouble> disc_samples(std::size_t n, double max_radius = 0.995) {
    std::vector<cdouble> pts;
    pts.reserve(n);
    const double ga = kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 1; i <= n; ++i) {
        const double r = max_radius * std::sqrt(double(i) / double(n + 1));
        pts.push_back(std::polar(r, ga * double(i)));
    }
    return pts;
}

}  // namespace

TEST_CASE("forward map on worked points") {
    CHECK(std::abs(cf::phi(1.0, {0.0, 0.0}) - cdouble{-1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(cf::phi(1.0, {0.5, 0.0}) - cdouble{-9.0, 0.0}) <= 1e-13);
    CHECK(std::abs(cf::phi(2.0, {0.0, 0.0}) - cdouble{-2.0, 0.0}) <= 1e-14);
    CHECK_THROWS_AS(cf::phi(1.0, {1.0, 0.0}), specbound::domain_error);
    CHECK_THROWS_AS(cf::phi(1.0, {0.0, 1.2}), specbound::domain_error);
    CHECK_THROWS_AS(cf::phi(-1.0, {0.0, 0.0}), specbound::domain_error);
}

TEST_CASE("inverse map on worked points") {
    CHECK(std::abs(cf::phi_inv(1.0, {-1.0, 0.0})) <= 1e-14);
    CHECK(std::abs(cf::phi_inv(1.0, {-9.0, 0.0}) - cdouble{0.5, 0.0}) <= 1e-14);
    CHECK(std::abs(cf::phi_inv(4.0, {-4.0, 0.0})) <= 1e-14);
    CHECK_THROWS_AS(cf::phi_inv(1.0, {2.0, 0.0}), specbound::domain_error);
    CHECK_THROWS_AS(cf::phi_inv(1.0, {0.0, 0.0}), specbound::domain_error);
}

TEST_CASE("distance to the ray") {
    CHECK(cf::dist_to_ray({3.0, 4.0}) == doctest::Approx(4.0));
    CHECK(cf::dist_to_ray({-3.0, 4.0}) == doctest::Approx(5.0));
    CHECK(cf::dist_to_ray({-2.0, 0.0}) == doctest::Approx(2.0));
    CHECK(cf::dist_to_ray({7.0, 0.0}) == doctest::Approx(0.0));
}

TEST_CASE("round trips at 1e-12") {
    for (double a : {0.5, 1.0, 10.0}) {
        for (const auto& z : disc_samples(10000)) {
            const cdouble lam = cf::phi(a, z);
            CHECK(!cf::on_ray(lam));
            const cdouble back = cf::phi_inv(a, lam);
            CHECK(std::abs(back - z) <= 1e-12 * (1.0 + std::abs(z)));
            const cdouble fwd = cf::phi(a, back);
            CHECK(std::abs(fwd - lam) <= 1e-12 * (1.0 + std::abs(lam)));
        }
    }
}

TEST_CASE("square root branch keeps Im >= 0") {
    for (const auto& z : disc_samples(2000)) {
        const cdouble lam = cf::phi(1.0, z);
        const cdouble root = cf::sqrt_slit(lam);
        CHECK(root.imag() >= 0.0);
        CHECK(std::abs(root * root - lam) <= 1e-12 * (1.0 + std::abs(lam)));
        // conjugating lambda reflects the root through the imaginary axis
        const cdouble rc = cf::sqrt_slit(std::conj(lam));
        if (std::abs(lam.imag()) > 1e-12) {
            CHECK(std::abs(rc - cdouble{-root.real(), root.imag()}) <=
                  1e-10 * (1.0 + std::abs(root)));
        }
    }
}

TEST_CASE("chord identities relating z and lambda") {
    // |z+1| = 2 sqrt|lambda| / |sqrt(lambda) + i sqrt(a)|,
    // |z-1| = 2 sqrt(a)      / |sqrt(lambda) + i sqrt(a)|
    for (double a : {0.5, 1.0, 10.0}) {
        const double sa = std::sqrt(a);
        for (const auto& z : disc_samples(10000)) {
            const cdouble lam = cf::phi(a, z);
            const double denom = std::abs(cf::sqrt_slit(lam) + cdouble{0.0, sa});
            CHECK(std::abs(z + 1.0) ==
                  doctest::Approx(2.0 * std::sqrt(std::abs(lam)) / denom).epsilon(1e-12));
            CHECK(std::abs(z - 1.0) == doctest::Approx(2.0 * sa / denom).epsilon(1e-12));
        }
    }
}

TEST_CASE("disc-side distortion brackets the ray distance") {
    auto iv = cf::distortion_disc(1.0, {0.5, 0.0});
    CHECK(iv.lower == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(iv.upper == doctest::Approx(48.0).epsilon(1e-13));
    auto iv0 = cf::distortion_disc(1.0, {0.0, 0.0});
    CHECK(iv0.lower == doctest::Approx(1.0));
    CHECK(iv0.upper == doctest::Approx(8.0));
    auto iv2 = cf::distortion_disc(2.0, {0.0, 0.0});
    CHECK(iv2.lower == doctest::Approx(2.0));
    CHECK(iv2.upper == doctest::Approx(16.0));

    for (double a : {0.5, 1.0, 10.0}) {
        for (const auto& z : disc_samples(10000)) {
            const auto b = cf::distortion_disc(a, z);
            const double d = cf::dist_to_ray(cf::phi(a, z));
            CHECK(d >= b.lower * (1.0 - 1e-12));
            CHECK(d <= b.upper * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("ray-side distortion brackets 1 - |z|") {
    auto iv = cf::distortion_ray(1.0, {-9.0, 0.0});
    CHECK(iv.lower == doctest::Approx(0.075).epsilon(1e-13));
    CHECK(iv.upper == doctest::Approx(1.2).epsilon(1e-13));
    auto iv1 = cf::distortion_ray(1.0, {-1.0, 0.0});
    CHECK(iv1.lower == doctest::Approx(0.125));
    CHECK(iv1.upper == doctest::Approx(2.0));
    CHECK_THROWS_AS(cf::distortion_ray(1.0, {0.0, 0.0}), specbound::domain_error);

    for (double a : {0.5, 1.0, 10.0}) {
        for (const auto& z : disc_samples(10000)) {
            const cdouble lam = cf::phi(a, z);
            const auto b = cf::distortion_ray(a, lam);
            const double d = 1.0 - std::abs(cf::phi_inv(a, lam));
            CHECK(d >= b.lower * (1.0 - 1e-10));
            CHECK(d <= b.upper * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("distance bound for the rational map") {
    auto r1 = cf::g_dist_bound(1.0, {0.0, 1.0});
    CHECK(std::abs(r1.g - cdouble{-0.5, 0.5}) <= 1e-14);
    CHECK(r1.actual == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(r1.lower == doctest::Approx(1.0 / (8.0 * std::sqrt(5.0))).epsilon(1e-13));
    CHECK(r1.actual >= r1.lower);

    auto r2 = cf::g_dist_bound(1.0, {-2.0, 0.0});
    CHECK(std::abs(r2.g - cdouble{1.0, 0.0}) <= 1e-14);
    CHECK(r2.actual == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r2.lower == doctest::Approx(2.0 / (18.0 * std::sqrt(5.0))).epsilon(1e-13));

    CHECK_THROWS_AS(cf::g_dist_bound(1.0, {-1.0, 0.0}), specbound::domain_error);

    for (double a : {1.0, 5.0}) {
        for (const auto& z : disc_samples(10000)) {
            const cdouble lam = cf::phi(a, z);
            if (std::abs(lam + a) < 1e-10) continue;
            const auto r = cf::g_dist_bound(a, lam);
            CHECK(r.actual >= r.lower * (1.0 - 1e-12));
        }
    }
}

TEST_CASE("segment distance helper") {
    CHECK(cf::dist_to_segment({0.5, 1.0}, {0.0, 0.0}, {1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(cf::dist_to_segment({2.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(cf::dist_to_segment({-3.0, 4.0}, {0.0, 0.0}, {0.0, 0.0}) == doctest::Approx(5.0));
}
