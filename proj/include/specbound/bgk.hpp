// Zero sums and growth envelopes for holomorphic functions on the unit disc
// normalized to h(0) = 1: the weighted sum over zeros controlled by the
// envelope amplitude, empirical envelope estimation on sample circles, and
// the specific envelope satisfied by the disc transplant of the
// perturbation determinant.
#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace specbound::bgk {

using cdouble = std::complex<double>;

// One boundary singularity of the envelope: a unimodular point and its
// exponent.
struct BoundaryPoint {
    cdouble zeta;
    double beta = 0.0;
};

// |h(z)| <= exp(k (1 - |z|)^{-alpha} prod_j |z - zeta_j|^{-beta_j}).
struct GrowthEnvelope {
    double k = 0.0;
    double alpha = 0.0;
    std::vector<BoundaryPoint> boundary;
};

// The exponent k (1-|z|)^{-alpha} prod |z - zeta_j|^{-beta_j} of the
// envelope at z in the open disc.
double envelope_log_bound(const GrowthEnvelope& env, cdouble z);

// sum over zeros of (1-|z|)^{alpha+1+tau} prod_j |z-zeta_j|^{(beta_j-1+tau)+}.
// Requires every zero strictly inside the disc and 0 < tau < 1.
double bgk_sum(const std::vector<cdouble>& zeros, double alpha, double tau,
               const std::vector<BoundaryPoint>& boundary);

// Sample circles for envelope estimation.
struct SampleSpec {
    std::vector<double> radii;
    int angles = 256;
};
SampleSpec default_samples();

// Smallest amplitude K making the envelope hold on the sample set:
// max over samples of (log|h(z)|)+ (1-|z|)^alpha prod_j |z-zeta_j|^{beta_j}.
// Requires h(0) = 1 within 1e-9.
double envelope_estimate(const std::function<cdouble(cdouble)>& h,
                         double alpha,
                         const std::vector<BoundaryPoint>& boundary,
                         const SampleSpec& samples = default_samples());

// The envelope satisfied by g = f circ phi_a on the disc, assembled from the
// resolvent constant ledger: amplitude K_2 a^{d/2s} / |omega-a|^p ||V||_p^p
// (regime s <= d/2, K_2 = 4^p K_1 C_omega^p) or the analogous K_5 form
// (regime s > d/2), with the boundary exponents at z = +1 and z = -1.
// Negative raw exponents are clamped to zero; each clamp multiplies the
// amplitude by 2^{-raw} so the clamped envelope still dominates the derived
// one (|z - zeta| <= 2 on the closed disc).
GrowthEnvelope lt_envelope(int d, double s, double p, double a, double omega,
                           double c_omega, double v_norm_p);

}  // namespace specbound::bgk
