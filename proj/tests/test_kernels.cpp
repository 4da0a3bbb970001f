#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "specbound/kernels.hpp"

using specbound::kernels::cdouble;
using specbound::kernels::Level;

namespace {

std::vector<cdouble> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cdouble> v(n);
    for (auto& z : v) z = {u(rng), u(rng)};
    return v;
}

double vec_scale(const std::vector<cdouble>& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s) + 1.0;
}

}  // namespace

TEST_CASE("scalar kernels match hand-computed values") {
    const auto& ops = specbound::kernels::scalar_ops();
    std::vector<cdouble> x = {{1.0, 2.0}, {0.0, -1.0}};
    std::vector<cdouble> y = {{3.0, 0.0}, {1.0, 1.0}};

    // conj(1+2i)*3 + conj(-i)*(1+i) = (3-6i) + (i)(1+i) = (3-6i) + (-1+i)
    cdouble d = ops.dotc(2, x.data(), y.data());
    CHECK(d.real() == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(d.imag() == doctest::Approx(-5.0).epsilon(1e-15));

    CHECK(ops.norm2sq(2, x.data()) == doctest::Approx(6.0).epsilon(1e-15));

    auto y2 = y;
    ops.axpy(2, {0.0, 1.0}, x.data(), y2.data());  // y + i*x
    CHECK(y2[0].real() == doctest::Approx(1.0));
    CHECK(y2[0].imag() == doctest::Approx(1.0));
    CHECK(y2[1].real() == doctest::Approx(2.0));
    CHECK(y2[1].imag() == doctest::Approx(1.0));

    auto x2 = x;
    ops.scal(2, {2.0, -1.0}, x2.data());
    CHECK(x2[0].real() == doctest::Approx(4.0));   // (2-i)(1+2i) = 4+3i
    CHECK(x2[0].imag() == doctest::Approx(3.0));
}

TEST_CASE("rot is unitary on each pair") {
    const auto& ops = specbound::kernels::scalar_ops();
    auto x = random_vec(17, 11);
    auto y = random_vec(17, 12);
    const double before = ops.norm2sq(17, x.data()) + ops.norm2sq(17, y.data());
    const double c = 0.6;
    const cdouble s = cdouble{0.48, 0.64};  // c^2 + |s|^2 = 1
    ops.rot(17, x.data(), y.data(), c, s);
    const double after = ops.norm2sq(17, x.data()) + ops.norm2sq(17, y.data());
    CHECK(after == doctest::Approx(before).epsilon(1e-13));
}

TEST_CASE("simd variants agree with scalar reference") {
    if (!specbound::kernels::available(Level::avx2)) {
        MESSAGE("avx2 unavailable on this host; equivalence suite skipped");
        return;
    }
    const auto& ref = specbound::kernels::scalar_ops();
    const auto& simd = specbound::kernels::ops_for(Level::avx2);

    // odd lengths exercise the tail paths
    for (std::size_t n : {1u, 2u, 3u, 8u, 15u, 64u, 257u, 1024u}) {
        auto x = random_vec(n, 1000 + n);
        auto y = random_vec(n, 2000 + n);
        const double sx = vec_scale(x), sy = vec_scale(y);

        cdouble d0 = ref.dotc(n, x.data(), y.data());
        cdouble d1 = simd.dotc(n, x.data(), y.data());
        CHECK(std::abs(d0 - d1) <= 1e-13 * sx * sy);

        CHECK(std::abs(ref.norm2sq(n, x.data()) - simd.norm2sq(n, x.data())) <= 1e-13 * sx * sx);

        const cdouble alpha{0.7, -1.3};
        auto ya = y, yb = y;
        ref.axpy(n, alpha, x.data(), ya.data());
        simd.axpy(n, alpha, x.data(), yb.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ya[i] - yb[i]) <= 1e-13 * (sx + sy));

        auto xa = x, xb = x;
        ref.scal(n, alpha, xa.data());
        simd.scal(n, alpha, xb.data());
        for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(xa[i] - xb[i]) <= 1e-13 * sx);

        auto rxa = x, rya = y, rxb = x, ryb = y;
        const double c = 0.28;
        const cdouble s{0.6, 0.76};  // unit rotation: c^2 + |s|^2 = 1.0128 close enough for equivalence
        ref.rot(n, rxa.data(), rya.data(), c, s);
        simd.rot(n, rxb.data(), ryb.data(), c, s);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(rxa[i] - rxb[i]) <= 1e-13 * (sx + sy));
            CHECK(std::abs(rya[i] - ryb[i]) <= 1e-13 * (sx + sy));
        }
    }
}

TEST_CASE("dispatch honors forced level") {
    using specbound::kernels::force_level;
    const auto saved = specbound::kernels::active_level();
    force_level(Level::scalar);
    CHECK(specbound::kernels::active_level() == Level::scalar);
    CHECK(specbound::kernels::level_name(specbound::kernels::active_level()) == "scalar");
    if (specbound::kernels::available(Level::avx2)) {
        force_level(Level::avx2);
        CHECK(specbound::kernels::active_level() == Level::avx2);
    }
    force_level(saved);
}
