// Periodic-box discretization of H = (-Delta)^s + V: grids, sampled
// potentials, operator assembly, Schatten norms, and the spectral-shift
// quantities built from them.
#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "specbound/matrix.hpp"

namespace specbound::discretize {

using la::cdouble;
using la::CMatrix;

// Uniform tensor grid on the box [-L/2, L/2)^d with n points per axis.
// Flat indices run with axis 0 fastest. n must be a power of two (the
// assembly goes through an FFT) and at least 4; the total point count is
// capped so dense matrices stay affordable.
struct Grid {
    int d = 1;
    int n = 4;
    double length = 1.0;

    static constexpr std::size_t default_cap = 4096;

    Grid() = default;
    Grid(int d, int n, double length, std::size_t cap = default_cap);

    std::size_t total() const { return total_; }

    // Coordinates of a flat index, x_j = -L/2 + j L/n per axis.
    std::vector<double> coords(std::size_t flat) const;

    // Integer frequencies of an FFT bin: digit t maps to t for t < n/2 and
    // to t - n otherwise, so the Nyquist row carries -n/2.
    std::vector<int> freqs(std::size_t flat) const;

  private:
    std::size_t total_ = 0;
};

// Fourier multipliers |2 pi k / L|^{2s} in FFT bin order.
std::vector<double> multipliers(const Grid& grid, double s);

enum class PotentialKind { gaussian, box, random_bandlimited };

// Generator descriptor: everything needed to rebuild the samples bit for
// bit. center is per axis (empty means the origin); width is the Gaussian
// scale, the box half-width, or the bandlimit; seed only matters for the
// random kind.
struct PotentialSpec {
    PotentialKind kind = PotentialKind::gaussian;
    cdouble amplitude = 1.0;
    double width = 1.0;
    std::vector<double> center;
    std::uint64_t seed = 0;
};

// A complex potential sampled on a grid, with its generator (when it came
// from one) and cached L^p norms.
class Potential {
  public:
    Potential(const Grid& grid, const PotentialSpec& spec);
    Potential(const Grid& grid, std::vector<cdouble> samples);

    static Potential constant(const Grid& grid, cdouble value);

    const Grid& grid() const { return grid_; }
    const std::vector<cdouble>& samples() const { return samples_; }
    const std::optional<PotentialSpec>& descriptor() const { return spec_; }

    // Discrete L^p norm ((L/n)^d sum |V|^p)^{1/p}, p >= 1. Cached.
    double lp_norm(double p) const;

    double sup_norm() const;

  private:
    Grid grid_;
    std::vector<cdouble> samples_;
    std::optional<PotentialSpec> spec_;
    mutable std::map<double, double> norm_cache_;
};

// Dense model of (-Delta)^s (+ V): the multiplier list in FFT bin order,
// the potential when present, and the assembled matrix in the sample basis.
struct DiscretizedOperator {
    Grid grid;
    double s = 1.0;
    std::vector<double> multipliers;
    std::optional<Potential> potential;
    CMatrix matrix;

    std::vector<double> multipliers_sorted() const;
};

DiscretizedOperator assemble_h0(const Grid& grid, double s);
DiscretizedOperator assemble_h(const Grid& grid, double s, const Potential& v);

inline constexpr double schatten_inf = std::numeric_limits<double>::infinity();

// Schatten p-norm via singular values; p >= 1, or schatten_inf for the
// operator norm.
double schatten_norm(const CMatrix& a, double p);

// Both sides of the Schatten bound for V (lambda - H0)^{-1}: the norm
// lhs = ||diag(V) F^H diag((lambda - m)^{-1}) F||_{S_p}^p against the
// separable product rhs = n^{-d} (sum_x |V_x|^p)(sum_k |lambda - m_k|^{-p}).
// Requires p >= 2 and lambda off the multiplier set.
struct BsCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
BsCheck bs_check(const Grid& grid, double s, double p, const Potential& v,
                 cdouble lambda);

// Shift parameter for the resolvent chain: the first omega in 1, 2, 4, ...
// with eta(omega) = ||diag(V) (-omega - H0)^{-1}|| <= eta_target, together
// with eta itself and C_omega = 1 / (1 - eta). Throws convergence_error
// (carrying the final eta) if the cap is passed first.
struct OmegaData {
    double omega = 1.0;
    double eta = 0.0;
    double c_omega = 1.0;
};
OmegaData find_omega(const Grid& grid, double s, const Potential& v,
                     double eta_target = 0.5,
                     double omega_cap = 1073741824.0);

// Checks ||(-a - H)^{-1}|| <= C_omega / |omega - a| for a > omega on the
// assembled H = H0 + V.
struct ShiftCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
ShiftCheck resolvent_shift_check(const Grid& grid, double s,
                                 const Potential& v, const OmegaData& om,
                                 double a);

}  // namespace specbound::discretize
