#pragma once

#include <complex>
#include <optional>

// L^p norm of the free fractional resolvent symbol (lambda - |xi|^{2s})^{-1}
// on R^d: direct radial quadrature, and the closed-form upper bounds with
// their full constant ledger.

namespace specbound::resolvent {

using cdouble = std::complex<double>;

struct ResolventConstants {
    double delta;       // d/2s - 1
    double c_ds;        // max(1, 2^{delta-1})
    double c_prime_ds;  // max(1, 2^{1-delta})
    double k1;          // max{(1+C) Ip, C Id} with Ip = int (t^2+1)^{-p/2}, Id = int t^delta (t^2+1)^{-p/2}
    double k2;          // K1 * C' * 2^{delta/2}
    double k3;          // 1/(delta+1) + 2 Ip
    double m1;          // max{K2, Id}
    std::optional<double> n1;  // max{Id, K3}; present only for delta in (-1, 0), i.e. s > d/2
};

// sphere_area(d) * int_0^inf r^{d-1} |r^{2s} - lambda|^{-p} dr, evaluated by
// adaptive quadrature after rescaling r by |lambda|^{1/2s}.  Requires
// lambda off [0, inf) and p > d/2s.
double lp_norm_direct(int d, double s, double p, cdouble lambda, double tol = 1e-10);

// Requires p > max(1, d/2s).
ResolventConstants constants(int d, double s, double p);

// sphere_area(d)/(2s) * M1 * |lambda|^{d/2s-1} / dist(lambda, R+)^{p-1}.
// Regime 0 < s <= d/2 (the boundary s = d/2 belongs here).
double bound_br(int d, double s, double p, cdouble lambda);

// sphere_area(d)/(2s) * N1 / dist(lambda, R+)^{p - d/2s}.  Regime s > d/2.
double bound_br1(int d, double s, double p, cdouble lambda);

}  // namespace specbound::resolvent
