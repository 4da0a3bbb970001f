#include "specbound/determinant.hpp"

#include <cmath>
#include <string>

#include "specbound/eigen.hpp"
#include "specbound/errors.hpp"
#include "specbound/fft.hpp"

namespace specbound::determinant {
namespace {

// U M U^H for the unitary DFT U = F / sqrt(T): forward transform down the
// columns, then the adjoint trick for the right factor.
CMatrix to_fourier_basis(const discretize::Grid& g, CMatrix m) {
    const std::vector<int> dims(static_cast<std::size_t>(g.d), g.n);
    const std::size_t total = g.total();
    for (std::size_t j = 0; j < total; ++j)
        la::fft_grid(m.col(j), dims, 1, false);
    CMatrix mh = la::adjoint(m);
    for (std::size_t j = 0; j < total; ++j)
        la::fft_grid(mh.col(j), dims, 1, false);
    CMatrix out = la::adjoint(mh);
    const double scale = 1.0 / static_cast<double>(total);
    for (std::size_t j = 0; j < total; ++j) {
        cdouble* col = out.col(j);
        for (std::size_t i = 0; i < total; ++i) col[i] *= scale;
    }
    return out;
}

bool on_positive_ray(cdouble lambda) {
    return lambda.imag() == 0.0 && lambda.real() >= 0.0;
}

}  // namespace

int reg_det_order(double p) {
    if (!(p > 0.0)) throw domain_error("reg_det_order: p must be > 0");
    return std::max(1, static_cast<int>(std::ceil(p)));
}

double default_gamma(int n) {
    if (n < 1) throw domain_error("default_gamma: order must be >= 1");
    if (n == 1) return 1.0;
    if (n == 2) return 0.5;
    return std::exp(1.0) * (2.0 + std::log(static_cast<double>(n)));
}

cdouble det_regularized(int n, const std::vector<cdouble>& eigenvalues) {
    if (n < 1) throw domain_error("det_regularized: order must be >= 1");
    // log of each factor (1 - lambda) exp(sum lambda^j / j); exp of the
    // accumulated sum is insensitive to the branch jumps of log.
    cdouble log_acc = 0.0;
    for (const cdouble& lam : eigenvalues) {
        const cdouble one_minus = 1.0 - lam;
        if (one_minus == cdouble(0.0)) return 0.0;
        cdouble term = std::log(one_minus);
        cdouble power = 1.0;
        for (int j = 1; j <= n - 1; ++j) {
            power *= lam;
            term += power / static_cast<double>(j);
        }
        log_acc += term;
    }
    return std::exp(log_acc);
}

FLambda::FLambda(const discretize::Grid& grid, double s, double p,
                 const discretize::Potential& v, double a)
    : grid_(grid),
      a_(a),
      order_(reg_det_order(p)),
      multipliers_(discretize::multipliers(grid, s)) {
    if (!(a > 0.0)) throw domain_error("FLambda: shift a must be > 0");
    const discretize::DiscretizedOperator h = discretize::assemble_h(grid, s, v);
    CMatrix shifted = h.matrix;
    for (std::size_t j = 0; j < grid.total(); ++j) shifted(j, j) += a;
    CMatrix core = la::inverse(shifted);
    for (std::size_t j = 0; j < grid.total(); ++j) {
        cdouble* col = core.col(j);
        const cdouble w = v.samples()[j];
        for (std::size_t i = 0; i < grid.total(); ++i) col[i] *= w;
    }
    core_ = to_fourier_basis(grid, std::move(core));
}

cdouble FLambda::operator()(cdouble lambda) const {
    if (on_positive_ray(lambda))
        throw domain_error("FLambda: lambda must avoid [0, inf)");
    const std::size_t total = grid_.total();
    CMatrix f(total, total);
    for (std::size_t j = 0; j < total; ++j) {
        const cdouble factor = (lambda + a_) / (lambda - multipliers_[j]);
        const cdouble* src = core_.col(j);
        cdouble* dst = f.col(j);
        for (std::size_t i = 0; i < total; ++i) dst[i] = factor * src[i];
    }
    return det_regularized(order_, eigen::eig(f).eigenvalues);
}

cdouble f_lambda(const discretize::Grid& grid, double s, double p,
                 const discretize::Potential& v, double a, cdouble lambda) {
    return FLambda(grid, s, p, v, a)(lambda);
}

GrowthCheck det_growth_check(int n, const CMatrix& a, double gamma) {
    if (n < 1) throw domain_error("det_growth_check: order must be >= 1");
    if (!(gamma > 0.0))
        throw domain_error("det_growth_check: gamma must be > 0");
    GrowthCheck out;
    out.lhs = std::abs(det_regularized(n, eigen::eig(a).eigenvalues));
    const double norm = discretize::schatten_norm(a, static_cast<double>(n));
    out.rhs = std::exp(gamma * std::pow(norm, n));
    return out;
}

}  // namespace specbound::determinant
