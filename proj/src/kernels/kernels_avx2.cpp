// AVX2/FMA kernels.  This translation unit is compiled with -mavx2 -mfma on
// x86-64 only; callers must check availability before dispatching here.
// Layout: a __m256d holds two interleaved complex<double> values
// [re0, im0, re1, im1].

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "specbound/kernels.hpp"

namespace specbound::kernels {

namespace {

// complex multiply of packed pairs: a*b
inline __m256d cmul(__m256d a, __m256d b) {
    __m256d ar = _mm256_movedup_pd(a);         // [ar0, ar0, ar1, ar1]
    __m256d ai = _mm256_permute_pd(a, 0xF);    // [ai0, ai0, ai1, ai1]
    __m256d bs = _mm256_permute_pd(b, 0x5);    // [bi0, br0, bi1, br1]
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

// conj(a)*b
inline __m256d cmulc(__m256d a, __m256d b) {
    __m256d ar = _mm256_movedup_pd(a);
    __m256d ai = _mm256_permute_pd(a, 0xF);
    __m256d bs = _mm256_permute_pd(b, 0x5);
    return _mm256_fmsubadd_pd(ar, b, _mm256_mul_pd(ai, bs));
}

inline cdouble reduce_pairs(__m256d acc) {
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    return {out[0], out[1]};
}

cdouble dotc_avx2(std::size_t n, const cdouble* x, const cdouble* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        acc = _mm256_add_pd(acc, cmulc(xv, yv));
    }
    cdouble r = reduce_pairs(acc);
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        r += cdouble{xr * yr + xi * yi, xr * yi - xi * yr};
    }
    return r;
}

void axpy_avx2(std::size_t n, cdouble alpha, const cdouble* x, cdouble* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    __m256d av = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul(av, xv)));
    }
    for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_avx2(std::size_t n, cdouble alpha, cdouble* x) {
    double* xp = reinterpret_cast<double*>(x);
    __m256d av = _mm256_setr_pd(alpha.real(), alpha.imag(), alpha.real(), alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        _mm256_storeu_pd(xp + 2 * i, cmul(av, xv));
    }
    for (; i < n; ++i) x[i] *= alpha;
}

double norm2sq_avx2(std::size_t n, const cdouble* x) {
    const double* xp = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    alignas(32) double out[4];
    _mm256_store_pd(out, acc);
    double r = out[0] + out[1] + out[2] + out[3];
    for (; i < n; ++i) r += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return r;
}

void rot_avx2(std::size_t n, cdouble* x, cdouble* y, double c, cdouble s) {
    double* xp = reinterpret_cast<double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    __m256d cv = _mm256_set1_pd(c);
    __m256d sv = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        __m256d xn = _mm256_fmsub_pd(cv, xv, cmulc(sv, yv));   // c*x - conj(s)*y
        __m256d yn = _mm256_fmadd_pd(cv, yv, cmul(sv, xv));    // s*x + c*y
        _mm256_storeu_pd(xp + 2 * i, xn);
        _mm256_storeu_pd(yp + 2 * i, yn);
    }
    const double sr = s.real(), si = s.imag();
    for (; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        x[i] = {c * xr - (sr * yr + si * yi), c * xi - (sr * yi - si * yr)};
        y[i] = {sr * xr - si * xi + c * yr, sr * xi + si * xr + c * yi};
    }
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{dotc_avx2, axpy_avx2, scal_avx2, norm2sq_avx2, rot_avx2};
    return ops;
}

}  // namespace specbound::kernels

#endif  // x86-64
