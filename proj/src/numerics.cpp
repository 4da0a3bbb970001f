#include "specbound/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "specbound/errors.hpp"

namespace specbound::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) throw domain_error("gamma_fn: require x > 0, got x = " + std::to_string(x));
    if (x < 0.5) {
        // reflection keeps the series argument >= 0.5
        return kPi / (std::sin(kPi * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    const double t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double beta_fn(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("beta_fn: require a > 0 and b > 0, got a = " + std::to_string(a) +
                           ", b = " + std::to_string(b));
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double sphere_area(int d) {
    if (d < 1) throw domain_error("sphere_area: require d >= 1, got d = " + std::to_string(d));
    return 2.0 * std::pow(kPi, 0.5 * d) / gamma_fn(0.5 * d);
}

double integral_algebraic(double delta, double p) {
    if (!(delta > -1.0))
        throw domain_error("integral_algebraic: require delta > -1 for integrability at 0, got delta = " +
                           std::to_string(delta));
    if (!(p > delta + 1.0))
        throw domain_error("integral_algebraic: require p > delta + 1 for tail convergence, got p = " +
                           std::to_string(p) + ", delta = " + std::to_string(delta));
    return 0.5 * beta_fn(0.5 * (delta + 1.0), 0.5 * (p - delta - 1.0));
}

double integral_rational(double a, double b) {
    if (!(a > -1.0))
        throw domain_error("integral_rational: require a > -1 for integrability at 0, got a = " +
                           std::to_string(a));
    if (!(b > a + 1.0))
        throw domain_error("integral_rational: require b > a + 1 for tail convergence, got b = " +
                           std::to_string(b) + ", a = " + std::to_string(a));
    return beta_fn(a + 1.0, b - a - 1.0);
}

namespace {

// Gauss(7)/Kronrod(15) nodes and weights on [-1, 1] (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0,
};
constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278,
};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694,
};

struct Segment {
    double a, b;
    double value;
    double error;
    bool splittable;
};

// One G7/K15 evaluation on [a, b]; error estimate is |K15 - G7| with the
// QUADPACK rescaling against the deviation integral.
Segment gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    double resk = kWgk[7] * fv[7];
    double resg = kWg[3] * fv[7];
    double resabs = kWgk[7] * std::abs(fv[7]);
    for (int j = 0; j < 7; ++j) {
        resk += kWgk[j] * (fv[j] + fv[14 - j]);
        resabs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) resg += kWg[j / 2] * (fv[j] + fv[14 - j]);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fv[7] - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
    resasc *= h;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double min_width = 1e-14 * (std::abs(a) + std::abs(b)) + 1e-300;
    return {a, b, resk * h, err, (b - a) > min_width};
}

QuadResult adapt(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 std::size_t max_segments, const char* who) {
    std::vector<Segment> segs;
    segs.push_back(gk15(f, a, b));
    std::size_t evals = 15;
    while (segs.size() < max_segments) {
        double total = 0.0, err = 0.0;
        std::size_t worst = segs.size();
        double worst_err = 0.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].splittable && segs[i].error > worst_err) {
                worst_err = segs[i].error;
                worst = i;
            }
        }
        const double target = std::max(rel_tol * std::abs(total), 1e-15);
        if (err <= target) return {total, err, evals};
        if (worst == segs.size()) break;  // nothing left to refine
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        segs[worst] = gk15(f, s.a, mid);
        segs.push_back(gk15(f, mid, s.b));
        evals += 30;
    }
    double total = 0.0, err = 0.0;
    for (const auto& s : segs) {
        total += s.value;
        err += s.error;
    }
    if (err <= std::max(rel_tol * std::abs(total), 1e-15)) return {total, err, evals};
    throw convergence_error(std::string(who) + ": quadrature failed to reach tolerance " +
                                std::to_string(rel_tol) + " within " + std::to_string(max_segments) +
                                " segments (best estimate " + std::to_string(total) + ")",
                            total, err);
}

constexpr std::size_t kMaxSegments = 4000;

}  // namespace

QuadResult quad_finite(const std::function<double(double)>& f, double a, double b, double rel_tol) {
    if (!(a < b)) throw domain_error("quad_finite: require a < b");
    return adapt(f, a, b, rel_tol, kMaxSegments, "quad_finite");
}

QuadResult quad_semiinfinite(const std::function<double(double)>& f, double decay_hint,
                             double rel_tol) {
    if (!(decay_hint > 1.0))
        throw domain_error("quad_semiinfinite: require decay exponent > 1 for convergence, got " +
                           std::to_string(decay_hint));
    const QuadResult head = adapt(f, 0.0, 1.0, 0.5 * rel_tol, kMaxSegments, "quad_semiinfinite");
    // int_1^inf f(t) dt = int_0^1 f(1/u) / u^2 du
    const auto tail_f = [&f](double u) { return f(1.0 / u) / (u * u); };
    const QuadResult tail = adapt(tail_f, 0.0, 1.0, 0.5 * rel_tol, kMaxSegments, "quad_semiinfinite");
    return {head.value + tail.value, head.error + tail.error, head.evaluations + tail.evaluations};
}

PowerSumBounds power_sum_bounds(double alpha) {
    if (!(alpha > 0.0))
        throw domain_error("power_sum_bounds: require alpha > 0, got alpha = " + std::to_string(alpha));
    const double f = std::pow(2.0, alpha - 1.0);
    return {std::min(1.0, f), std::max(1.0, f)};
}

}  // namespace specbound::numerics
