#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Radix-2 FFT used for circulant operator assembly and changes to the
// Fourier basis.  Transforms are unnormalized: forward uses e^{-2pi i jk/n},
// inverse uses e^{+2pi i jk/n}; inverse(forward(x)) = n * x.

namespace specbound::la {

using cdouble = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place transform of a single line of n elements spaced `stride` apart.
void fft_line(cdouble* x, std::size_t n, std::ptrdiff_t stride, bool inverse);

// In-place transform along every axis of a flattened tensor with extents
// dims (axis 0 fastest); `stride` is the element spacing of the flat array.
void fft_grid(cdouble* base, const std::vector<int>& dims, std::ptrdiff_t stride, bool inverse);

}  // namespace specbound::la
