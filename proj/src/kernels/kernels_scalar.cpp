#include "specbound/kernels.hpp"

namespace specbound::kernels {

namespace {

cdouble dotc_scalar(std::size_t n, const cdouble* x, const cdouble* y) {
    // accumulate real and imaginary parts separately; conj(x)*y expanded
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

void axpy_scalar(std::size_t n, cdouble alpha, const cdouble* x, cdouble* y) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr};
    }
}

void scal_scalar(std::size_t n, cdouble alpha, cdouble* x) {
    const double ar = alpha.real(), ai = alpha.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        x[i] = {ar * xr - ai * xi, ar * xi + ai * xr};
    }
}

double norm2sq_scalar(std::size_t n, const cdouble* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void rot_scalar(std::size_t n, cdouble* x, cdouble* y, double c, cdouble s) {
    const double sr = s.real(), si = s.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        const double yr = y[i].real(), yi = y[i].imag();
        // conj(s)*y = (sr*yr + si*yi) + i*(sr*yi - si*yr)
        x[i] = {c * xr - (sr * yr + si * yi), c * xi - (sr * yi - si * yr)};
        // s*x = (sr*xr - si*xi) + i*(sr*xi + si*xr)
        y[i] = {sr * xr - si * xi + c * yr, sr * xi + si * xr + c * yi};
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{dotc_scalar, axpy_scalar, scal_scalar, norm2sq_scalar, rot_scalar};
    return ops;
}

}  // namespace specbound::kernels
