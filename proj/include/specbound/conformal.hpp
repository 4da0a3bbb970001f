#pragma once

#include <complex>

// Conformal machinery between the unit disc and the slit plane C \ [0, inf),
// with the distortion inequalities used to transfer eigenvalue sums, plus the
// rational map g(lambda) = -1/(a+lambda) and its distance lower bound.

namespace specbound::conformal {

using cdouble = std::complex<double>;

// Square root with branch cut along [0, inf): argument taken in (0, 2pi),
// so Im sqrt >= 0 on the whole slit plane.
cdouble sqrt_slit(cdouble lambda);

// distance from lambda to the ray [0, inf)
double dist_to_ray(cdouble lambda);

// distance from w to the closed segment [p, q]
double dist_to_segment(cdouble w, cdouble p, cdouble q);

// true if lambda lies on [0, inf) within tolerance 1e-14 * (1 + |lambda|)
bool on_ray(cdouble lambda);

// lambda = -a ((z+1)/(z-1))^2, disc -> C \ [0, inf)
cdouble phi(double a, cdouble z);

// z = (sqrt(lambda) - i sqrt(a)) / (sqrt(lambda) + i sqrt(a))
cdouble phi_inv(double a, cdouble lambda);

struct Interval {
    double lower;
    double upper;
};

// Two-sided bound on dist_to_ray(phi(a, z)) in terms of d(z, T) = 1 - |z|:
//   a d(z,T) |z+1| / |z-1|^3  <=  d(phi(a,z), R+)  <=  8 a d(z,T) |z+1| / |z-1|^3
Interval distortion_disc(double a, cdouble z);

// Two-sided bound on 1 - |phi_inv(a, lambda)|:
//   (sqrt(a)/4) d(lambda,R+) / (sqrt|lambda| (a+|lambda|))  <=  1-|z|  <=  4 sqrt(a) (same)
Interval distortion_ray(double a, cdouble lambda);

struct GDistBound {
    cdouble g;      // -1/(a+lambda)
    double actual;  // distance from g to the segment [-1/a, 0]
    double lower;   // (1/(2 sqrt 5)) d(lambda, R+) / (a+|lambda|)^2
};

// Distance of g(lambda) from the image of the positive half-axis, with its
// proved lower bound; requires lambda != -a.
GDistBound g_dist_bound(double a, cdouble lambda);

}  // namespace specbound::conformal
