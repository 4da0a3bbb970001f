#include "specbound/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace specbound::la {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

// contiguous in-place radix-2, decimation in time
void fft_contig(cdouble* x, std::size_t n, bool inverse) {
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * kTwoPi / double(len);
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cdouble w = std::polar(1.0, ang * double(k));
                const cdouble u = x[i + k];
                const cdouble v = x[i + k + len / 2] * w;
                x[i + k] = u + v;
                x[i + k + len / 2] = u - v;
            }
        }
    }
}

}  // namespace

void fft_line(cdouble* x, std::size_t n, std::ptrdiff_t stride, bool inverse) {
    if (!is_pow2(n)) throw std::invalid_argument("fft_line: length must be a power of two");
    if (n == 1) return;
    if (stride == 1) {
        fft_contig(x, n, inverse);
        return;
    }
    std::vector<cdouble> scratch(n);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = x[std::ptrdiff_t(i) * stride];
    fft_contig(scratch.data(), n, inverse);
    for (std::size_t i = 0; i < n; ++i) x[std::ptrdiff_t(i) * stride] = scratch[i];
}

void fft_grid(cdouble* base, const std::vector<int>& dims, std::ptrdiff_t stride, bool inverse) {
    std::size_t total = 1;
    for (int nd : dims) {
        if (nd < 1 || !is_pow2(std::size_t(nd)))
            throw std::invalid_argument("fft_grid: every extent must be a power of two");
        total *= std::size_t(nd);
    }
    std::size_t block = 1;  // flat stride of the current axis
    for (int nd : dims) {
        const std::size_t n = std::size_t(nd);
        const std::size_t lines = total / n;
        for (std::size_t line = 0; line < lines; ++line) {
            const std::size_t outer = line / block;
            const std::size_t inner = line % block;
            const std::size_t start = outer * block * n + inner;
            fft_line(base + std::ptrdiff_t(start) * stride, n, std::ptrdiff_t(block) * stride,
                     inverse);
        }
        block *= n;
    }
}

}  // namespace specbound::la
