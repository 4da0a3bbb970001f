#pragma once

#include <complex>
#include <cstddef>
#include <string>

// Vector kernels used by the dense linear-algebra layer.  Scalar reference
// implementations always exist; on x86-64 an AVX2 variant of each kernel is
// selected at runtime when the CPU supports it.  All kernels operate on
// contiguous (unit-stride) arrays of std::complex<double>.

namespace specbound::kernels {

using cdouble = std::complex<double>;

struct Ops {
    // sum_i conj(x[i]) * y[i]
    cdouble (*dotc)(std::size_t n, const cdouble* x, const cdouble* y);
    // y[i] += alpha * x[i]
    void (*axpy)(std::size_t n, cdouble alpha, const cdouble* x, cdouble* y);
    // x[i] *= alpha
    void (*scal)(std::size_t n, cdouble alpha, cdouble* x);
    // sum_i |x[i]|^2
    double (*norm2sq)(std::size_t n, const cdouble* x);
    // plane rotation with real cosine c and complex sine s:
    //   (x[i], y[i]) <- (c*x[i] - conj(s)*y[i], s*x[i] + c*y[i])
    void (*rot)(std::size_t n, cdouble* x, cdouble* y, double c, cdouble s);
};

enum class Level { scalar, avx2 };

const Ops& scalar_ops();

// Kernels for `level`; throws std::runtime_error if unavailable on this CPU.
const Ops& ops_for(Level level);

bool available(Level level);

// Active kernel set.  Chosen once: highest available level, unless the
// SPECBOUND_SIMD environment variable ("scalar" or "avx2") overrides it.
const Ops& active();
Level active_level();

// Test hook: override the active level for the rest of the process.
void force_level(Level level);

std::string level_name(Level level);

}  // namespace specbound::kernels
