// Regularized determinants det_n(I - A), the perturbation determinant
// f(lambda) = det_n(I - (lambda + a)(a + H)^{-1} V (lambda - H0)^{-1}) on a
// discretized operator, and the exponential growth bound relating |det_n|
// to the Schatten norm.
#pragma once

#include <complex>
#include <vector>

#include "specbound/discretize.hpp"
#include "specbound/matrix.hpp"

namespace specbound::determinant {

using la::cdouble;
using la::CMatrix;

// Regularization order for exponent p: the smallest integer n >= p (at
// least 1).
int reg_det_order(double p);

// Growth constant for |det_n(I - A)| <= exp(gamma ||A||_{S_n}^n): exact
// values 1 and 1/2 for n = 1, 2; for n >= 3 the conservative literature
// value e (2 + log n).
double default_gamma(int n);

// prod_k (1 - lambda_k) exp(sum_{j=1}^{n-1} lambda_k^j / j), accumulated in
// the log domain so large spectra cannot overflow. n = 1 is the plain
// determinant of I - A.
cdouble det_regularized(int n, const std::vector<cdouble>& eigenvalues);

// The determinant whose zeros are the eigenvalues of H = H0 + V: caches the
// similarity-transformed factor (a + H)^{-1} diag(V) in the Fourier basis,
// where (lambda - H0)^{-1} is diagonal, so each evaluation costs one column
// scaling plus one eigendecomposition.
class FLambda {
  public:
    FLambda(const discretize::Grid& grid, double s, double p,
            const discretize::Potential& v, double a);

    // det_n(I - F(lambda)) for lambda off [0, inf).
    cdouble operator()(cdouble lambda) const;

    int order() const { return order_; }
    double shift() const { return a_; }

  private:
    discretize::Grid grid_;
    double a_ = 0.0;
    int order_ = 1;
    std::vector<double> multipliers_;
    CMatrix core_;  // (a + H)^{-1} diag(V) conjugated to the Fourier basis
};

cdouble f_lambda(const discretize::Grid& grid, double s, double p,
                 const discretize::Potential& v, double a, cdouble lambda);

// lhs = |det_n(I - A)| from the certified spectrum, rhs = the growth bound
// exp(gamma ||A||_{S_n}^n).
struct GrowthCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
GrowthCheck det_growth_check(int n, const CMatrix& a, double gamma);

}  // namespace specbound::determinant
