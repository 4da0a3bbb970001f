#include "specbound/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "specbound/eigen.hpp"
#include "specbound/errors.hpp"
#include "specbound/fft.hpp"

namespace specbound::discretize {
namespace {

constexpr double kPi = std::numbers::pi;

// Standard normals from a fully specified pipeline: mt19937_64 words mapped
// to (0, 1] uniforms, then Box-Muller. Keeps sample streams bit-exact across
// standard libraries.
class NormalGen {
  public:
    explicit NormalGen(std::uint64_t seed) : rng_(seed) {}

    cdouble complex_unit_variance() {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        // Real and imaginary parts each carry variance 1/2.
        const double g1 = r * std::cos(2.0 * kPi * u2);
        const double g2 = r * std::sin(2.0 * kPi * u2);
        return cdouble(g1, g2) / std::sqrt(2.0);
    }

  private:
    double uniform01() {
        return static_cast<double>((rng_() >> 11) + 1) * 0x1p-53;
    }

    std::mt19937_64 rng_;
};

std::vector<std::size_t> axis_strides(const Grid& g) {
    std::vector<std::size_t> st(static_cast<std::size_t>(g.d));
    std::size_t acc = 1;
    for (int a = 0; a < g.d; ++a) {
        st[static_cast<std::size_t>(a)] = acc;
        acc *= static_cast<std::size_t>(g.n);
    }
    return st;
}

// Per-axis digits of every flat index, laid out digits[flat * d + axis].
std::vector<int> digit_table(const Grid& g) {
    const std::size_t total = g.total();
    const std::size_t d = static_cast<std::size_t>(g.d);
    std::vector<int> digits(total * d);
    std::vector<int> cur(d, 0);
    for (std::size_t t = 0; t < total; ++t) {
        for (std::size_t a = 0; a < d; ++a) digits[t * d + a] = cur[a];
        for (std::size_t a = 0; a < d; ++a) {
            if (++cur[a] < g.n) break;
            cur[a] = 0;
        }
    }
    return digits;
}

// Difference of the center coordinate reduced to the nearest periodic image.
double wrapped_delta(double x, double c, double length) {
    double dx = std::fmod(x - c, length);
    if (dx < -0.5 * length) dx += length;
    if (dx >= 0.5 * length) dx -= length;
    return dx;
}

std::vector<double> resolved_center(const Grid& g, const PotentialSpec& spec) {
    if (spec.center.empty())
        return std::vector<double>(static_cast<std::size_t>(g.d), 0.0);
    if (spec.center.size() != static_cast<std::size_t>(g.d))
        throw domain_error(
            "Potential: center must have one entry per axis, got " +
            std::to_string(spec.center.size()));
    return spec.center;
}

std::vector<cdouble> generate_samples(const Grid& g,
                                      const PotentialSpec& spec) {
    const std::size_t total = g.total();
    std::vector<cdouble> v(total);
    const std::vector<double> center = resolved_center(g, spec);
    switch (spec.kind) {
        case PotentialKind::gaussian: {
            if (!(spec.width > 0.0))
                throw domain_error("Potential: gaussian needs width > 0");
            for (std::size_t t = 0; t < total; ++t) {
                const std::vector<double> x = g.coords(t);
                double r2 = 0.0;
                for (int a = 0; a < g.d; ++a) {
                    const std::size_t ua = static_cast<std::size_t>(a);
                    const double dx = wrapped_delta(x[ua], center[ua], g.length);
                    r2 += dx * dx;
                }
                v[t] = spec.amplitude *
                       std::exp(-r2 / (spec.width * spec.width));
            }
            return v;
        }
        case PotentialKind::box: {
            if (!(spec.width > 0.0))
                throw domain_error("Potential: box needs width > 0");
            for (std::size_t t = 0; t < total; ++t) {
                const std::vector<double> x = g.coords(t);
                bool inside = true;
                for (int a = 0; a < g.d && inside; ++a) {
                    const std::size_t ua = static_cast<std::size_t>(a);
                    const double dx = wrapped_delta(x[ua], center[ua], g.length);
                    inside = std::abs(dx) <= spec.width;
                }
                v[t] = inside ? spec.amplitude : cdouble(0.0);
            }
            return v;
        }
        case PotentialKind::random_bandlimited: {
            // One complex Gaussian coefficient per mode with |k|_inf <= B,
            // drawn in a fixed odometer order (axis 0 fastest) so the seed
            // pins the field. The 1/(2B+1)^{d/2} factor keeps the expected
            // magnitude at |amplitude| independent of the bandlimit.
            const int bandlimit =
                std::max(1, static_cast<int>(std::floor(spec.width)));
            if (bandlimit >= g.n / 2)
                throw domain_error(
                    "Potential: bandlimit must stay below n/2, got " +
                    std::to_string(bandlimit));
            const int side = 2 * bandlimit + 1;
            std::size_t modes = 1;
            for (int a = 0; a < g.d; ++a) modes *= static_cast<std::size_t>(side);
            NormalGen gen(spec.seed);
            std::vector<cdouble> coeff(modes);
            for (std::size_t m = 0; m < modes; ++m)
                coeff[m] = gen.complex_unit_variance();
            const double scale =
                std::pow(static_cast<double>(side), -0.5 * g.d);
            std::vector<int> k(static_cast<std::size_t>(g.d), -bandlimit);
            std::fill(v.begin(), v.end(), cdouble(0.0));
            for (std::size_t m = 0; m < modes; ++m) {
                for (std::size_t t = 0; t < total; ++t) {
                    const std::vector<double> x = g.coords(t);
                    double phase = 0.0;
                    for (int a = 0; a < g.d; ++a) {
                        const std::size_t ua = static_cast<std::size_t>(a);
                        phase += 2.0 * kPi * k[ua] * x[ua] / g.length;
                    }
                    v[t] += coeff[m] * std::polar(1.0, phase);
                }
                for (int a = 0; a < g.d; ++a) {
                    const std::size_t ua = static_cast<std::size_t>(a);
                    if (++k[ua] <= bandlimit) break;
                    k[ua] = -bandlimit;
                }
            }
            for (std::size_t t = 0; t < total; ++t)
                v[t] *= spec.amplitude * scale;
            return v;
        }
    }
    throw domain_error("Potential: unknown kind");
}

// Circulant kernel of F^H diag(values) F: the inverse FFT of the bin values
// divided by the total point count. Entry (x, y) of the operator is
// kernel[(x - y) mod n per axis].
std::vector<cdouble> circulant_kernel(const Grid& g,
                                      std::vector<cdouble> values) {
    const std::vector<int> dims(static_cast<std::size_t>(g.d), g.n);
    la::fft_grid(values.data(), dims, 1, true);
    const double inv = 1.0 / static_cast<double>(g.total());
    for (cdouble& c : values) c *= inv;
    return values;
}

CMatrix circulant_matrix(const Grid& g, const std::vector<cdouble>& kernel) {
    const std::size_t total = g.total();
    const std::size_t d = static_cast<std::size_t>(g.d);
    const std::vector<int> digits = digit_table(g);
    const std::vector<std::size_t> strides = axis_strides(g);
    CMatrix m(total, total);
    for (std::size_t y = 0; y < total; ++y) {
        cdouble* col = m.col(y);
        for (std::size_t x = 0; x < total; ++x) {
            std::size_t diff = 0;
            for (std::size_t a = 0; a < d; ++a) {
                int da = digits[x * d + a] - digits[y * d + a];
                if (da < 0) da += g.n;
                diff += static_cast<std::size_t>(da) * strides[a];
            }
            col[x] = kernel[diff];
        }
    }
    return m;
}

}  // namespace

Grid::Grid(int d_, int n_, double length_, std::size_t cap)
    : d(d_), n(n_), length(length_) {
    if (d < 1) throw domain_error("Grid: dimension must be >= 1");
    if (n < 4 || !la::is_pow2(static_cast<std::size_t>(n)))
        throw domain_error("Grid: points per axis must be a power of two >= 4");
    if (!(length > 0.0)) throw domain_error("Grid: box length must be > 0");
    double tot = 1.0;
    for (int a = 0; a < d; ++a) tot *= static_cast<double>(n);
    if (tot > static_cast<double>(cap))
        throw resource_error("Grid: n^d = " + std::to_string(tot) +
                             " exceeds cap " + std::to_string(cap));
    total_ = 1;
    for (int a = 0; a < d; ++a) total_ *= static_cast<std::size_t>(n);
}

std::vector<double> Grid::coords(std::size_t flat) const {
    std::vector<double> x(static_cast<std::size_t>(d));
    const double h = length / static_cast<double>(n);
    for (int a = 0; a < d; ++a) {
        const std::size_t ua = static_cast<std::size_t>(a);
        x[ua] = -0.5 * length +
                h * static_cast<double>(flat % static_cast<std::size_t>(n));
        flat /= static_cast<std::size_t>(n);
    }
    return x;
}

std::vector<int> Grid::freqs(std::size_t flat) const {
    std::vector<int> k(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        const int t = static_cast<int>(flat % static_cast<std::size_t>(n));
        k[static_cast<std::size_t>(a)] = t < n / 2 ? t : t - n;
        flat /= static_cast<std::size_t>(n);
    }
    return k;
}

std::vector<double> multipliers(const Grid& grid, double s) {
    if (!(s > 0.0)) throw domain_error("multipliers: s must be > 0");
    const std::size_t total = grid.total();
    std::vector<double> m(total);
    for (std::size_t t = 0; t < total; ++t) {
        const std::vector<int> k = grid.freqs(t);
        double q2 = 0.0;
        for (int a = 0; a < grid.d; ++a) {
            const double q =
                2.0 * kPi * k[static_cast<std::size_t>(a)] / grid.length;
            q2 += q * q;
        }
        m[t] = q2 == 0.0 ? 0.0 : std::pow(q2, s);
    }
    return m;
}

Potential::Potential(const Grid& grid, const PotentialSpec& spec)
    : grid_(grid), samples_(generate_samples(grid, spec)), spec_(spec) {}

Potential::Potential(const Grid& grid, std::vector<cdouble> samples)
    : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != grid_.total())
        throw domain_error("Potential: sample count must equal grid total");
}

Potential Potential::constant(const Grid& grid, cdouble value) {
    return Potential(grid, std::vector<cdouble>(grid.total(), value));
}

double Potential::lp_norm(double p) const {
    if (!(p >= 1.0)) throw domain_error("lp_norm: p must be >= 1");
    const auto it = norm_cache_.find(p);
    if (it != norm_cache_.end()) return it->second;
    double sum = 0.0;
    for (const cdouble& v : samples_) sum += std::pow(std::abs(v), p);
    const double cell = std::pow(grid_.length / grid_.n, grid_.d);
    const double norm = std::pow(cell * sum, 1.0 / p);
    norm_cache_.emplace(p, norm);
    return norm;
}

double Potential::sup_norm() const {
    double m = 0.0;
    for (const cdouble& v : samples_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> DiscretizedOperator::multipliers_sorted() const {
    std::vector<double> m = multipliers;
    std::sort(m.begin(), m.end());
    return m;
}

DiscretizedOperator assemble_h0(const Grid& grid, double s) {
    DiscretizedOperator op;
    op.grid = grid;
    op.s = s;
    op.multipliers = multipliers(grid, s);
    std::vector<cdouble> bins(op.multipliers.begin(), op.multipliers.end());
    op.matrix = circulant_matrix(grid, circulant_kernel(grid, std::move(bins)));
    return op;
}

DiscretizedOperator assemble_h(const Grid& grid, double s,
                               const Potential& v) {
    if (v.samples().size() != grid.total())
        throw domain_error("assemble_h: potential lives on a different grid");
    DiscretizedOperator op = assemble_h0(grid, s);
    op.potential = v;
    for (std::size_t j = 0; j < grid.total(); ++j)
        op.matrix(j, j) += v.samples()[j];
    return op;
}

double schatten_norm(const CMatrix& a, double p) {
    const std::vector<double> sigma = eigen::svd(a);
    if (p == schatten_inf) return sigma.empty() ? 0.0 : sigma.front();
    if (!(p >= 1.0)) throw domain_error("schatten_norm: p must be >= 1");
    double sum = 0.0;
    for (double s : sigma) sum += std::pow(s, p);
    return std::pow(sum, 1.0 / p);
}

BsCheck bs_check(const Grid& grid, double s, double p, const Potential& v,
                 cdouble lambda) {
    if (!(p >= 2.0)) throw domain_error("bs_check: p must be >= 2");
    const std::vector<double> m = multipliers(grid, s);
    const std::size_t total = grid.total();
    std::vector<cdouble> bins(total);
    double inv_sum = 0.0;
    for (std::size_t t = 0; t < total; ++t) {
        const cdouble gap = lambda - m[t];
        if (std::abs(gap) == 0.0)
            throw domain_error("bs_check: lambda hits a multiplier");
        bins[t] = 1.0 / gap;
        inv_sum += std::pow(std::abs(gap), -p);
    }
    CMatrix a = circulant_matrix(grid, circulant_kernel(grid, std::move(bins)));
    for (std::size_t y = 0; y < total; ++y) {
        cdouble* col = a.col(y);
        for (std::size_t x = 0; x < total; ++x) col[x] *= v.samples()[x];
    }
    double vp = 0.0;
    for (const cdouble& w : v.samples()) vp += std::pow(std::abs(w), p);
    BsCheck out;
    out.lhs = std::pow(schatten_norm(a, p), p);
    out.rhs = vp * inv_sum / static_cast<double>(total);
    return out;
}

namespace {

double eta_at(const Grid& grid, const std::vector<double>& m,
              const Potential& v, double omega) {
    const std::size_t total = grid.total();
    std::vector<cdouble> bins(total);
    for (std::size_t t = 0; t < total; ++t) bins[t] = -1.0 / (omega + m[t]);
    CMatrix a = circulant_matrix(grid, circulant_kernel(grid, std::move(bins)));
    for (std::size_t y = 0; y < total; ++y) {
        cdouble* col = a.col(y);
        for (std::size_t x = 0; x < total; ++x) col[x] *= v.samples()[x];
    }
    return schatten_norm(a, schatten_inf);
}

}  // namespace

OmegaData find_omega(const Grid& grid, double s, const Potential& v,
                     double eta_target, double omega_cap) {
    if (!(eta_target > 0.0 && eta_target < 1.0))
        throw domain_error("find_omega: eta_target must lie in (0, 1)");
    const std::vector<double> m = multipliers(grid, s);
    double eta = 0.0;
    for (double omega = 1.0; omega <= omega_cap; omega *= 2.0) {
        eta = eta_at(grid, m, v, omega);
        if (eta <= eta_target) {
            OmegaData out;
            out.omega = omega;
            out.eta = eta;
            out.c_omega = 1.0 / (1.0 - eta);
            return out;
        }
    }
    throw convergence_error(
        "find_omega: no omega <= " + std::to_string(omega_cap) +
            " reached the target; final norm " + std::to_string(eta),
        eta, eta - eta_target);
}

ShiftCheck resolvent_shift_check(const Grid& grid, double s,
                                 const Potential& v, const OmegaData& om,
                                 double a) {
    if (!(a > om.omega))
        throw domain_error("resolvent_shift_check: requires a > omega");
    DiscretizedOperator h = assemble_h(grid, s, v);
    CMatrix shifted = h.matrix;
    const std::size_t total = grid.total();
    for (std::size_t j = 0; j < total; ++j) {
        for (std::size_t i = 0; i < total; ++i)
            shifted(i, j) = -shifted(i, j);
        shifted(j, j) -= a;
    }
    ShiftCheck out;
    out.lhs = schatten_norm(la::inverse(shifted), schatten_inf);
    out.rhs = om.c_omega / std::abs(om.omega - a);
    return out;
}

}  // namespace specbound::discretize
