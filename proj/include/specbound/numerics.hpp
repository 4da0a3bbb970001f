#pragma once

#include <cstddef>
#include <functional>

// Shared numerical primitives: special functions, closed-form Beta-type
// integrals, adaptive Gauss-Kronrod quadrature on finite and semi-infinite
// intervals, and the elementary power-sum comparison factors.

namespace specbound::numerics {

// positive part max(x, 0)
inline double pospart(double x) { return x > 0.0 ? x : 0.0; }

// Gamma function, Lanczos approximation (g = 7, 9 coefficients).
// Accurate to >= 12 significant digits for x in (0, 50).
double gamma_fn(double x);

// Beta function B(a,b) for a,b > 0, computed in log space.
double beta_fn(double a, double b);

// Surface area of the unit sphere S^{d-1} in R^d: 2 pi^{d/2} / Gamma(d/2).
// d = 1 -> 2, d = 2 -> 2 pi, d = 3 -> 4 pi.
double sphere_area(int d);

// int_0^inf t^delta (t^2+1)^{-p/2} dt = (1/2) B((delta+1)/2, (p-delta-1)/2).
// Requires delta > -1 and p > delta + 1.
double integral_algebraic(double delta, double p);

// int_0^inf t^a (1+t)^{-b} dt = B(a+1, b-a-1).
// Requires a > -1 and b > a + 1.
double integral_rational(double a, double b);

struct QuadResult {
    double value;
    double error;           // absolute error estimate
    std::size_t evaluations;
};

// Adaptive Gauss(7)/Kronrod(15) quadrature on [a, b].
QuadResult quad_finite(const std::function<double(double)>& f, double a, double b,
                       double rel_tol = 1e-10);

// Adaptive quadrature on [0, inf): [0,1] directly, tail via t -> 1/t.
// decay_hint is the caller's claimed power-law decay exponent of f at
// infinity and must exceed 1; failure to converge within the interval
// budget raises convergence_error carrying the best estimate.
QuadResult quad_semiinfinite(const std::function<double(double)>& f, double decay_hint,
                             double rel_tol = 1e-10);

// Factors (c, C) with c (x^a + y^a) <= (x+y)^a <= C (x^a + y^a) for all
// x, y >= 0: c = min(1, 2^{a-1}), C = max(1, 2^{a-1}).  Requires a > 0.
struct PowerSumBounds {
    double lower;
    double upper;
};
PowerSumBounds power_sum_bounds(double alpha);

}  // namespace specbound::numerics
