#include "specbound/lieb_thirring.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "specbound/conformal.hpp"
#include "specbound/determinant.hpp"
#include "specbound/eigen.hpp"
#include "specbound/errors.hpp"
#include "specbound/numerics.hpp"
#include "specbound/resolvent.hpp"

namespace specbound::lieb_thirring {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

[[noreturn]] void fail(const std::string& msg) { throw domain_error(msg); }

std::string num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

// Pre-integration shape of the per-case bound: the spectral sum carries
// |lambda|^{-alpha} (a+|lambda|)^{-e_prime}, and the shift integration runs
// against the weight |omega-a|^p a^w.
struct CaseKernel {
    double alpha = 0.0;
    double e_prime = 0.0;
    double w = 0.0;
};

CaseKernel case_kernel(const SpectralParams& sp, CaseId id) {
    const double p = sp.p;
    const double tau = sp.tau;
    const double y = sp.d / (2.0 * sp.s);
    switch (id) {
        case CaseId::t1_case1:
            return {0.5 * (p + tau), y + 0.5 * p + 1.5 * tau, -1.0};
        case CaseId::t1_case2:
            return {0.5 * p, p + 2.0 * tau, -1.0};
        case CaseId::t1_case3a:
        case CaseId::t1_case3b:
            return {y, 1.5 * (p + tau) - y, 0.5 * (p - 2.0 * y - 2.0 - tau)};
        case CaseId::t1b_region1a:
        case CaseId::t1b_region1b:
            return {1.0, 1.5 * (p + tau) - 1.5 * y + 0.5,
                    0.5 * (p - 3.0 * y - 1.0 - tau)};
        case CaseId::t1b_region2:
            return {0.5 * (p + 1.0 - y + tau), p + 1.0 - y + tau,
                    0.5 * (p - 3.0 * y - 1.0 - tau)};
        case CaseId::t1b_region3:
            return {0.5 * (p + 1.0 - y + tau),
                    0.5 * (p + 1.0) + 0.5 * y + 1.5 * tau, -1.0};
        case CaseId::t2_single:
            return {0.0, 2.0 * p, p - y - 1.0 - tau};
    }
    fail("case_kernel: unknown case identifier");
}

// Closed Beta form of the shift integral: a weight power w >= 0 lifts into
// the numerator, a negative one folds into the denominator.
double case_integral(double p, const CaseKernel& k) {
    return k.w >= 0.0 ? numerics::integral_rational(p + k.w, k.e_prime)
                      : numerics::integral_rational(p, k.e_prime - k.w);
}

double dyadic_exponent(Theorem theorem, const SpectralParams& sp) {
    const double p = sp.p;
    const double tau = sp.tau;
    const double y = sp.d / (2.0 * sp.s);
    if (theorem == Theorem::t1)
        return 3.5 * p + 1.5 * tau + std::min(p, 2.0 * y) - y;
    if (theorem == Theorem::t1b)
        return 2.0 * (2.0 * p + 1.0 - y + tau) -
               0.5 * std::max({p - y - 1.0 + tau, 0.0, 3.0 * y - p - 1.0 + tau});
    return 0.0;
}

}  // namespace

std::string to_string(Theorem theorem) {
    switch (theorem) {
        case Theorem::t1: return "T1";
        case Theorem::t1b: return "T1b";
        case Theorem::t2: return "T2";
    }
    fail("to_string: unknown theorem tag");
}

Theorem parse_theorem(const std::string& name) {
    if (name == "T1" || name == "t1") return Theorem::t1;
    if (name == "T1b" || name == "t1b" || name == "T1B") return Theorem::t1b;
    if (name == "T2" || name == "t2") return Theorem::t2;
    throw validation_error("theorem must be one of T1, T1b, T2 (got \"" + name + "\")");
}

double tau_limit(Theorem theorem, int d, double s, double p) {
    const double y = d / (2.0 * s);
    switch (theorem) {
        case Theorem::t1: {
            const double r = 2.0 * y;  // d/s
            if (p < r) return std::min(r - p, 1.0);
            if (p == r) return 1.0;
            return std::min(p - r, 1.0);
        }
        case Theorem::t1b: {
            const double lead = p - y - 1.0;
            const double back = 3.0 * y - p - 1.0;
            if (lead >= 0.0) return std::min(p + 1.0 - 3.0 * y, 1.0);
            if (back < 0.0)
                return std::min({p + 1.0 - 3.0 * y, y + 1.0 - p, 1.0});
            return std::min(y + 1.0 - p, 1.0);
        }
        case Theorem::t2:
            return std::numeric_limits<double>::infinity();
    }
    fail("tau_limit: unknown theorem tag");
}

void validate(Theorem theorem, const SpectralParams& sp) {
    if (sp.d < 1) fail("dimension d must be a positive integer (got " + num(sp.d) + ")");
    if (!(sp.s > 0.0)) fail("order s must be positive (got " + num(sp.s) + ")");
    if (!(sp.p >= 1.0)) fail("exponent p must be at least 1 (got " + num(sp.p) + ")");
    if (!(sp.tau > 0.0)) fail("tau must be positive (got " + num(sp.tau) + ")");
    const double y = sp.d / (2.0 * sp.s);
    switch (theorem) {
        case Theorem::t1:
            if (!(sp.s <= 0.5 * sp.d))
                fail("T1 requires 0 < s <= d/2: s = " + num(sp.s) + ", d = " + num(sp.d));
            if (!(sp.p > y))
                fail("T1 requires p > d/2s: p = " + num(sp.p) + ", d/2s = " + num(y));
            break;
        case Theorem::t1b:
            if (!(sp.s > 0.5 * sp.d))
                fail("T1b requires s > d/2: s = " + num(sp.s) + ", d = " + num(sp.d));
            if (!(sp.p > 1.0))
                fail("T1b requires p > 1: p = " + num(sp.p));
            break;
        case Theorem::t2:
            if (!(sp.p > std::max(1.0, y)))
                fail("T2 requires p > max(1, d/2s): p = " + num(sp.p) +
                     ", max(1, d/2s) = " + num(std::max(1.0, y)));
            break;
    }
    const double limit = tau_limit(theorem, sp.d, sp.s, sp.p);
    if (!(sp.tau < limit))
        fail("tau outside the admissible range for " + to_string(theorem) +
             " at these (d, s, p): need 0 < tau < " + num(limit) +
             ", got " + num(sp.tau));
}

ExponentSpec exponents(Theorem theorem, const SpectralParams& sp) {
    validate(theorem, sp);
    const double p = sp.p;
    const double tau = sp.tau;
    const double y = sp.d / (2.0 * sp.s);
    ExponentSpec es;
    switch (theorem) {
        case Theorem::t1:
            es.q = p + tau;
            es.alpha = std::min(0.5 * (p + tau), y);
            es.beta = 2.0 * tau + 0.5 * numerics::pospart(2.0 * y - p - tau);
            es.form = DenominatorForm::power_split;
            break;
        case Theorem::t1b:
            es.q = p + 1.0 - y + tau;
            es.alpha = 0.5 + 0.5 * std::min(p - y + tau, 1.0);
            es.beta = 2.0 * tau + 0.5 * numerics::pospart(y + 1.0 - p - tau);
            es.form = DenominatorForm::power_split;
            break;
        case Theorem::t2:
            es.q = p;
            es.alpha = 0.0;
            es.beta = y + tau;
            es.form = DenominatorForm::uniform;
            break;
    }
    return es;
}

CaseId case_dispatch(Theorem theorem, const SpectralParams& sp) {
    validate(theorem, sp);
    const double p = sp.p;
    const double tau = sp.tau;
    const double y = sp.d / (2.0 * sp.s);
    if (theorem == Theorem::t1) {
        const double r = 2.0 * y;
        if (p < r) return CaseId::t1_case1;
        if (p == r) return CaseId::t1_case2;
        return p - r - 2.0 - tau >= 0.0 ? CaseId::t1_case3a : CaseId::t1_case3b;
    }
    if (theorem == Theorem::t1b) {
        const double lead = p - y - 1.0;
        const double back = 3.0 * y - p - 1.0;
        if (lead >= 0.0 && back >= 0.0)
            fail("empty sign combination reached: p - d/2s - 1 >= 0 and "
                 "3d/2s - p - 1 >= 0 require d/2s >= 1, contradicting s > d/2");
        if (lead >= 0.0)
            return p - 3.0 * y - 1.0 - tau >= 0.0 ? CaseId::t1b_region1a
                                                  : CaseId::t1b_region1b;
        if (back < 0.0) return CaseId::t1b_region2;
        return CaseId::t1b_region3;
    }
    return CaseId::t2_single;
}

int case_index(CaseId id) {
    switch (id) {
        case CaseId::t1_case1: return 1;
        case CaseId::t1_case2: return 2;
        case CaseId::t1_case3a: return 3;
        case CaseId::t1_case3b: return 4;
        case CaseId::t1b_region1a: return 5;
        case CaseId::t1b_region1b: return 6;
        case CaseId::t1b_region2: return 7;
        case CaseId::t1b_region3: return 8;
        case CaseId::t2_single: return 0;
    }
    fail("case_index: unknown case identifier");
}

std::string case_label(CaseId id) {
    switch (id) {
        case CaseId::t1_case1: return "T1 case 1 (d/2s < p < d/s)";
        case CaseId::t1_case2: return "T1 case 2 (p = d/s)";
        case CaseId::t1_case3a: return "T1 case 3 (p > d/s, heavy weight)";
        case CaseId::t1_case3b: return "T1 case 3 (p > d/s, light weight)";
        case CaseId::t1b_region1a: return "T1b region 1 (p >= d/2s + 1, heavy weight)";
        case CaseId::t1b_region1b: return "T1b region 1 (p >= d/2s + 1, light weight)";
        case CaseId::t1b_region2: return "T1b region 2 (3d/2s - 1 < p < d/2s + 1)";
        case CaseId::t1b_region3: return "T1b region 3 (p <= 3d/2s - 1)";
        case CaseId::t2_single: return "T2 (uniform weight)";
    }
    fail("case_label: unknown case identifier");
}

ConstantsBundle constants_bundle(Theorem theorem, const SpectralParams& sp,
                                 const discretize::OmegaData& om) {
    validate(theorem, sp);
    if (!(om.omega >= 1.0))
        fail("omega >= 1 required by the final bound (got " + num(om.omega) + ")");
    if (!(om.c_omega >= 1.0))
        fail("C_omega >= 1 required (got " + num(om.c_omega) + ")");

    const double p = sp.p;
    const double tau = sp.tau;
    const double y = sp.d / (2.0 * sp.s);
    const CaseId id = case_dispatch(theorem, sp);
    const CaseKernel kern = case_kernel(sp, id);

    ConstantsBundle b;
    b.case_id = id;
    b.j = case_index(id);
    b.omega = om.omega;
    b.c_omega = om.c_omega;
    b.integral = case_integral(p, kern);
    b.delta = dyadic_exponent(theorem, sp);

    const double cw_p = std::pow(om.c_omega, p);
    const double beta = exponents(theorem, sp).beta;
    if (theorem == Theorem::t2) {
        b.k1 = numerics::sphere_area(sp.d) /
               (2.0 * sp.s * std::pow(two_pi, sp.d)) *
               numerics::integral_algebraic(y - 1.0, p);
        b.explicit_factor = std::pow(2.0 * std::sqrt(5.0), p) * b.k1 * cw_p *
                            std::pow(om.omega, y) / (b.integral * tau);
        return b;
    }

    b.gamma_p = determinant::default_gamma(determinant::reg_det_order(p));
    const double prefactor = b.gamma_p / std::pow(two_pi, sp.d) *
                             numerics::sphere_area(sp.d) / (2.0 * sp.s);
    const auto rc = resolvent::constants(sp.d, sp.s, p);
    double lead = 0.0;
    if (theorem == Theorem::t1) {
        b.k1 = prefactor * rc.m1;
        b.k2 = std::pow(4.0, p) * b.k1 * cw_p;
        lead = b.k1;
    } else {
        if (!rc.n1) fail("T1b constants need s > d/2");
        b.k4 = prefactor * *rc.n1;
        b.k5 = std::pow(4.0, p) * b.k4 * cw_p;
        lead = b.k4;
    }
    b.explicit_factor = lead * cw_p * std::exp2(b.delta) *
                        std::pow(om.omega, beta - tau) / (b.integral * tau);
    return b;
}

LtSum lt_sum(const std::vector<cdouble>& candidates, const ExponentSpec& es) {
    if (!(es.q > 0.0)) fail("distance exponent q must be positive");
    if (es.alpha < 0.0 || es.beta < 0.0) fail("denominator exponents must be nonnegative");
    LtSum out;
    for (const cdouble lam : candidates) {
        const double mod = std::abs(lam);
        const bool split = es.form == DenominatorForm::power_split;
        if (mod == 0.0 && split && es.alpha > 0.0) {
            ++out.excluded;
            continue;
        }
        double den = std::pow(1.0 + mod, es.beta);
        if (split && es.alpha != 0.0) den *= std::pow(mod, es.alpha);
        out.value += std::pow(conformal::dist_to_ray(lam), es.q) / den;
        ++out.terms;
    }
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::property_only: return "property-only";
    }
    fail("to_string: unknown verdict tag");
}

VerificationReport verify(Theorem theorem, const discretize::Grid& grid,
                          const SpectralParams& sp, const discretize::Potential& v,
                          double eps) {
    const auto t0 = std::chrono::steady_clock::now();
    validate(theorem, sp);
    if (grid.d != sp.d)
        fail("grid dimension " + num(grid.d) + " disagrees with params d = " + num(sp.d));
    if (!(eps > 0.0)) fail("classification threshold eps must be positive");

    VerificationReport rep;
    rep.theorem = theorem;
    rep.params = sp;
    rep.grid = grid;
    rep.potential = v.descriptor();
    rep.v_norm_p = v.lp_norm(sp.p);
    rep.omega = discretize::find_omega(grid, sp.s, v);
    rep.exponent_spec = exponents(theorem, sp);
    rep.constants = constants_bundle(theorem, sp, rep.omega);

    const auto h = discretize::assemble_h(grid, sp.s, v);
    const auto spectrum = eigen::classify_discrete(eigen::eig(h.matrix), eps);
    rep.eigenvalue_count = spectrum.eigenvalues.size();
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
        if (spectrum.tags[i] == eigen::Tag::discrete_candidate)
            rep.candidates.push_back(spectrum.eigenvalues[i]);

    const LtSum sum = lt_sum(rep.candidates, rep.exponent_spec);
    rep.lhs = sum.value;
    rep.excluded = sum.excluded;
    rep.rhs = rep.constants.explicit_factor * std::pow(rep.v_norm_p, sp.p);
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : 0.0;
    rep.margin = rep.rhs - rep.lhs;
    if (theorem == Theorem::t2)
        rep.verdict = rep.lhs <= rep.rhs ? Verdict::holds : Verdict::violated;
    else
        rep.verdict = rep.lhs == 0.0 ? Verdict::holds : Verdict::property_only;
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

HansmannCheck hansmann_check(const la::CMatrix& a, const la::CMatrix& b, double p) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw validation_error("hansmann_check: square matrices of equal size required");
    if (!(p >= 1.0)) fail("hansmann_check: p >= 1 required (got " + num(p) + ")");

    const la::CMatrix adj = la::adjoint(a);
    const la::CMatrix comm = la::sub(la::matmul(adj, a), la::matmul(a, adj));
    const double fro = la::frobenius_norm(a);
    if (la::frobenius_norm(comm) > 1e-10 * std::max(1.0, fro * fro))
        throw validation_error("hansmann_check: matrix is not normal");

    const auto spec_a = eigen::eig(a);
    const auto& ev = spec_a.eigenvalues;
    // Segment covering the spectrum: the most distant eigenvalue pair; the
    // rest must sit on that line for the covering to be a genuine segment.
    cdouble lo = ev.front();
    cdouble hi = ev.front();
    double spread = 0.0;
    for (std::size_t i = 0; i < ev.size(); ++i)
        for (std::size_t k = i + 1; k < ev.size(); ++k)
            if (std::abs(ev[i] - ev[k]) > spread) {
                spread = std::abs(ev[i] - ev[k]);
                lo = ev[i];
                hi = ev[k];
            }
    if (spread > 0.0) {
        const cdouble dir = (hi - lo) / spread;
        for (const cdouble mu : ev) {
            const double off = std::abs(std::imag((mu - lo) * std::conj(dir)));
            if (off > 1e-10 * std::max(1.0, spread))
                throw validation_error("hansmann_check: eigenvalues are not collinear");
        }
    }

    HansmannCheck out;
    for (const cdouble mu : eigen::eig(b).eigenvalues)
        out.lhs += std::pow(conformal::dist_to_segment(mu, lo, hi), p);
    out.rhs = std::pow(discretize::schatten_norm(la::sub(b, a), p), p);
    return out;
}

PipelineCheck theorem2_pipeline_check(const discretize::Grid& grid, double s, double p,
                                      const discretize::Potential& v, double a,
                                      double eps) {
    if (!(s > 0.0)) fail("order s must be positive");
    const double y = grid.d / (2.0 * s);
    if (!(p > std::max(1.0, y)))
        fail("T2 route requires p > max(1, d/2s): p = " + num(p) +
             ", max(1, d/2s) = " + num(std::max(1.0, y)));
    const auto om = discretize::find_omega(grid, s, v);
    if (!(a > om.omega))
        fail("shift a must exceed omega: a = " + num(a) + ", omega = " + num(om.omega));

    const double k1 = numerics::sphere_area(grid.d) /
                      (2.0 * s * std::pow(two_pi, grid.d)) *
                      numerics::integral_algebraic(y - 1.0, p);

    PipelineCheck out;
    const auto h = discretize::assemble_h(grid, s, v);
    const auto spectrum = eigen::classify_discrete(eigen::eig(h.matrix), eps);
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
        if (spectrum.tags[i] != eigen::Tag::discrete_candidate) continue;
        const cdouble lam = spectrum.eigenvalues[i];
        out.lhs += std::pow(conformal::dist_to_ray(lam), p) /
                   std::pow(a + std::abs(lam), 2.0 * p);
    }
    out.rhs = std::pow(2.0 * std::sqrt(5.0), p) * k1 * std::pow(om.c_omega, p) *
              std::pow(a, y - p) / std::pow(a - om.omega, p) *
              std::pow(v.lp_norm(p), p);
    return out;
}

IntegrationCheck integration_consistency(Theorem theorem, const SpectralParams& sp,
                                         double omega, cdouble lambda) {
    validate(theorem, sp);
    if (!(omega >= 1.0)) fail("omega >= 1 required (got " + num(omega) + ")");
    if (conformal::on_ray(lambda)) fail("lambda must lie off the ray [0, inf)");

    const CaseId id = case_dispatch(theorem, sp);
    const CaseKernel kern = case_kernel(sp, id);
    const double beta = exponents(theorem, sp).beta;
    const double mod = std::abs(lambda);
    const auto f = [&](double a) {
        return std::pow(a - omega, sp.p) * std::pow(a, kern.w) /
               std::pow(a + mod, kern.e_prime);
    };
    IntegrationCheck out;
    out.numeric = numerics::quad_finite(f, omega, 1e4 * omega, 1e-9).value;
    out.bound = case_integral(sp.p, kern) * std::pow(omega + mod, -beta);
    return out;
}

}  // namespace specbound::lieb_thirring
