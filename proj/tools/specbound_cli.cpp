// Command-line front end: batch runs from a JSON config plus direct access
// to the constants, resolvent-norm, distortion, growth-envelope, spectrum,
// and single-job verification surfaces.
#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "specbound/bgk.hpp"
#include "specbound/config.hpp"
#include "specbound/conformal.hpp"
#include "specbound/discretize.hpp"
#include "specbound/eigen.hpp"
#include "specbound/errors.hpp"
#include "specbound/lieb_thirring.hpp"
#include "specbound/resolvent.hpp"

namespace cfg = specbound::config;
namespace lt = specbound::lieb_thirring;
namespace dz = specbound::discretize;
namespace cf = specbound::conformal;
using specbound::la::cdouble;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct PotentialFlags {
    std::string kind = "gaussian";
    double amp_re = 1.0;
    double amp_im = 0.0;
    double width = 1.0;
    std::vector<double> center;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
};

void add_potential_flags(CLI::App* cmd, PotentialFlags& f) {
    cmd->add_option("--kind", f.kind,
                    "potential kind: gaussian | box | random_bandlimited")
        ->capture_default_str();
    cmd->add_option("--amp-re", f.amp_re, "Re of the amplitude")->capture_default_str();
    cmd->add_option("--amp-im", f.amp_im, "Im of the amplitude")->capture_default_str();
    cmd->add_option("--width", f.width, "scale / half-width / bandlimit")
        ->capture_default_str();
    cmd->add_option("--center", f.center, "center, one coordinate per axis");
    f.seed_opt = cmd->add_option("--seed", f.seed,
                                 "generator seed (required for the random kind)");
}

dz::PotentialSpec to_potential_spec(const PotentialFlags& f) {
    dz::PotentialSpec spec;
    if (f.kind == "gaussian") {
        spec.kind = dz::PotentialKind::gaussian;
    } else if (f.kind == "box") {
        spec.kind = dz::PotentialKind::box;
    } else if (f.kind == "random_bandlimited") {
        spec.kind = dz::PotentialKind::random_bandlimited;
        if (f.seed_opt->count() == 0)
            throw specbound::validation_error(
                "--seed: required for the random_bandlimited kind");
    } else {
        throw specbound::validation_error(
            "--kind: unknown potential kind \"" + f.kind +
            "\" (expected gaussian | box | random_bandlimited)");
    }
    spec.amplitude = {f.amp_re, f.amp_im};
    spec.width = f.width;
    spec.center = f.center;
    spec.seed = f.seed;
    return spec;
}

std::string tag_name(specbound::eigen::Tag tag) {
    switch (tag) {
        case specbound::eigen::Tag::discrete_candidate: return "discrete_candidate";
        case specbound::eigen::Tag::essential_like: return "essential_like";
        default: return "unclassified";
    }
}

// golden-angle spiral: low-discrepancy points filling the disc
std::vector<cdouble> disc_samples(std::size_t n, double max_radius = 0.995) {
    std::vector<cdouble> pts;
    pts.reserve(n);
    const double ga = kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t i = 1; i <= n; ++i) {
        const double r = max_radius * std::sqrt(double(i) / double(n + 1));
        pts.push_back(std::polar(r, ga * double(i)));
    }
    return pts;
}

int do_run(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw specbound::resource_error("cannot read config file " + path);
    std::ostringstream text;
    text << file.rdbuf();
    const cfg::RunConfig config = cfg::parse_config(text.str());
    const cfg::RunManifest manifest = cfg::run_jobs(config);
    for (const cfg::JobResult& r : manifest.jobs) {
        std::cout << "job " << r.index << ": " << r.status;
        if (!r.message.empty()) std::cout << " (" << r.message << ")";
        if (!r.report_path.empty()) std::cout << " -> " << r.report_path;
        std::cout << '\n';
    }
    std::cout << "manifest: " << cfg::resolve_output_dir(config)
              << "/manifest.json (config " << manifest.config_hash << ")\n";
    return cfg::exit_code(manifest);
}

int do_constants(const lt::Theorem theorem, const lt::SpectralParams& sp,
                 double omega, double c_omega) {
    dz::OmegaData om;
    om.omega = omega;
    om.c_omega = c_omega;
    om.eta = c_omega > 1.0 ? 1.0 - 1.0 / c_omega : 0.0;
    const lt::ExponentSpec ex = lt::exponents(theorem, sp);
    const lt::ConstantsBundle b = lt::constants_bundle(theorem, sp, om);
    std::cout.precision(10);
    std::cout << "case = " << lt::case_label(b.case_id) << " (j = " << b.j << ")\n"
              << "q = " << ex.q << ", alpha = " << ex.alpha << ", beta = " << ex.beta
              << ", form = "
              << (ex.form == lt::DenominatorForm::uniform ? "uniform" : "power_split")
              << '\n'
              << "omega = " << b.omega << ", C_omega = " << b.c_omega << '\n'
              << "K1 = " << b.k1 << '\n'
              << "I = " << b.integral << '\n'
              << "gamma_p = " << b.gamma_p << ", delta = " << b.delta << '\n'
              << "K2 = " << b.k2 << ", K4 = " << b.k4 << ", K5 = " << b.k5 << '\n'
              << "explicit factor = " << b.explicit_factor << '\n';
    return 0;
}

int do_resolvent(int d, double s, double p, cdouble lambda, double tol) {
    namespace rs = specbound::resolvent;
    const double direct = rs::lp_norm_direct(d, s, p, lambda, tol);
    std::cout.precision(10);
    std::cout << "direct = " << direct << '\n';
    if (2.0 * s <= double(d))
        std::cout << "bound = " << rs::bound_br(d, s, p, lambda)
                  << " (regime 0 < s <= d/2)\n";
    else
        std::cout << "bound = " << rs::bound_br1(d, s, p, lambda)
                  << " (regime s > d/2)\n";
    return 0;
}

int do_distortion(double a, std::size_t samples) {
    double worst = -1.0;
    for (const cdouble z : disc_samples(samples)) {
        const cdouble lam = cf::phi(a, z);
        const auto disc = cf::distortion_disc(a, z);
        const double dist = cf::dist_to_ray(lam);
        const double scale_disc = std::max({dist, disc.upper, 1e-300});
        worst = std::max({worst, (disc.lower - dist) / scale_disc,
                          (dist - disc.upper) / scale_disc});
        const auto ray = cf::distortion_ray(a, lam);
        const double gap = 1.0 - std::abs(cf::phi_inv(a, lam));
        const double scale_ray = std::max({gap, ray.upper, 1e-300});
        worst = std::max({worst, (ray.lower - gap) / scale_ray,
                          (gap - ray.upper) / scale_ray});
    }
    std::cout << "suites = disc+ray, a = " << a << ", samples = " << samples << '\n';
    if (worst <= 0.0)
        std::cout << "max violation = none\n";
    else
        std::cout << "max violation = " << worst << '\n';
    return worst <= 0.0 ? 0 : 1;
}

int do_bgk(int d, double s, double p, double a, double omega, double c_omega,
           double v_norm, bool has_z, cdouble z) {
    const auto env = specbound::bgk::lt_envelope(d, s, p, a, omega, c_omega, v_norm);
    std::cout.precision(10);
    std::cout << "k = " << env.k << '\n' << "alpha = " << env.alpha << '\n';
    for (const auto& b : env.boundary)
        std::cout << "boundary: zeta = [" << b.zeta.real() << ", " << b.zeta.imag()
                  << "], beta = " << b.beta << '\n';
    if (has_z)
        std::cout << "log bound at z = " << specbound::bgk::envelope_log_bound(env, z)
                  << '\n';
    return 0;
}

int do_spectrum(int d, int n, double length, double s, const dz::PotentialSpec& spec,
                double eps) {
    const dz::Grid grid(d, n, length);
    const dz::Potential v(grid, spec);
    const auto h = dz::assemble_h(grid, s, v);
    const auto spectrum =
        specbound::eigen::classify_discrete(specbound::eigen::eig(h.matrix), eps);
    std::cout.precision(17);
    std::cout << "re,im,residual,tag\n";
    for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i)
        std::cout << spectrum.eigenvalues[i].real() << ','
                  << spectrum.eigenvalues[i].imag() << ',' << spectrum.residuals[i]
                  << ',' << tag_name(spectrum.tags[i]) << '\n';
    return 0;
}

int do_verify(const lt::Theorem theorem, const lt::SpectralParams& sp, int n,
              double length, const dz::PotentialSpec& spec, double eps,
              const std::string& report_path) {
    const dz::Grid grid(sp.d, n, length);
    const dz::Potential v(grid, spec);
    const auto report = lt::verify(theorem, grid, sp, v, eps);
    if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary | std::ios::trunc);
        file << cfg::serialize_report(report) << '\n';
        if (!file)
            throw specbound::resource_error("cannot write report " + report_path);
    }
    std::cout.precision(10);
    std::cout << "verdict = " << lt::to_string(report.verdict) << '\n'
              << "lhs = " << report.lhs << '\n'
              << "rhs = " << report.rhs << '\n'
              << "ratio = " << report.ratio << ", margin = " << report.margin << '\n'
              << "omega = " << report.omega.omega
              << ", C_omega = " << report.omega.c_omega << '\n'
              << "candidates = " << report.candidates.size() << " of "
              << report.eigenvalue_count << " eigenvalues\n";
    return report.verdict == lt::Verdict::violated ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-model checks for fractional Schrodinger spectral bounds"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* cmd_run = app.add_subcommand("run", "execute every job in a JSON config");
    cmd_run->add_option("config", config_path, "path to the run config")->required();

    std::string theorem_name = "T2";
    int d = 1;
    double s = 0.5, p = 2.0, tau = 0.1;
    double omega = 1.0, c_omega = 2.0;
    const auto add_params = [&](CLI::App* cmd) {
        cmd->add_option("--theorem", theorem_name, "T1 | T1b | T2")
            ->capture_default_str();
        cmd->add_option("--d", d, "dimension")->capture_default_str();
        cmd->add_option("--s", s, "fractional power")->capture_default_str();
        cmd->add_option("--p", p, "Schatten / L^p exponent")->capture_default_str();
        cmd->add_option("--tau", tau, "slack exponent")->capture_default_str();
    };

    CLI::App* cmd_constants =
        app.add_subcommand("constants", "exponent and constant tables for a theorem");
    add_params(cmd_constants);
    cmd_constants->add_option("--omega", omega, "shift omega")->capture_default_str();
    cmd_constants->add_option("--c-omega", c_omega, "shift constant C_omega")
        ->capture_default_str();

    double lambda_re = -1.0, lambda_im = 0.0, quad_tol = 1e-10;
    CLI::App* cmd_resolvent = app.add_subcommand(
        "resolvent", "L^p norm of the free resolvent kernel against its bound");
    cmd_resolvent->add_option("--d", d, "dimension")->capture_default_str();
    cmd_resolvent->add_option("--s", s, "fractional power")->capture_default_str();
    cmd_resolvent->add_option("--p", p, "integrability exponent")->capture_default_str();
    cmd_resolvent->add_option("--lambda", lambda_re, "Re lambda")->capture_default_str();
    cmd_resolvent->add_option("--lambda-im", lambda_im, "Im lambda")
        ->capture_default_str();
    cmd_resolvent->add_option("--tol", quad_tol, "quadrature tolerance")
        ->capture_default_str();

    double a = 1.0;
    std::size_t samples = 10000;
    CLI::App* cmd_distortion = app.add_subcommand(
        "distortion", "sample the two-sided distortion brackets of the slit map");
    cmd_distortion->add_option("--a", a, "map parameter")->capture_default_str();
    cmd_distortion->add_option("--samples", samples, "sample count")
        ->capture_default_str();

    double v_norm = 1.0, z_re = 0.0, z_im = 0.0;
    CLI::App* cmd_bgk =
        app.add_subcommand("bgk", "growth envelope feeding the zero-sum bound");
    cmd_bgk->add_option("--d", d, "dimension")->capture_default_str();
    cmd_bgk->add_option("--s", s, "fractional power")->capture_default_str();
    cmd_bgk->add_option("--p", p, "Schatten exponent")->capture_default_str();
    cmd_bgk->add_option("--a", a, "map parameter")->capture_default_str();
    cmd_bgk->add_option("--omega", omega, "shift omega")->capture_default_str();
    cmd_bgk->add_option("--c-omega", c_omega, "shift constant")->capture_default_str();
    cmd_bgk->add_option("--v-norm", v_norm, "||V||_p")->capture_default_str();
    CLI::Option* z_re_opt =
        cmd_bgk->add_option("--z-re", z_re, "evaluate the log bound at z");
    cmd_bgk->add_option("--z-im", z_im, "Im z")->capture_default_str();

    int n = 32;
    double length = 10.0, eps = 1e-8;
    PotentialFlags pot;
    CLI::App* cmd_spectrum = app.add_subcommand(
        "spectrum", "eigenvalues of the discretized operator as CSV");
    cmd_spectrum->add_option("--d", d, "dimension")->capture_default_str();
    cmd_spectrum->add_option("--n", n, "grid points per axis")->capture_default_str();
    cmd_spectrum->add_option("--length", length, "box side length")
        ->capture_default_str();
    cmd_spectrum->add_option("--s", s, "fractional power")->capture_default_str();
    cmd_spectrum->add_option("--eps", eps, "discrete-candidate threshold")
        ->capture_default_str();
    add_potential_flags(cmd_spectrum, pot);

    std::string report_path;
    PotentialFlags vpot;
    CLI::App* cmd_verify =
        app.add_subcommand("verify", "run one job and print the verdict");
    add_params(cmd_verify);
    cmd_verify->add_option("--n", n, "grid points per axis")->capture_default_str();
    cmd_verify->add_option("--length", length, "box side length")
        ->capture_default_str();
    cmd_verify->add_option("--eps", eps, "discrete-candidate threshold")
        ->capture_default_str();
    cmd_verify->add_option("--report", report_path, "write the report JSON here");
    add_potential_flags(cmd_verify, vpot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_run) return do_run(config_path);
        if (*cmd_constants)
            return do_constants(lt::parse_theorem(theorem_name), {d, s, p, tau}, omega,
                                c_omega);
        if (*cmd_resolvent)
            return do_resolvent(d, s, p, {lambda_re, lambda_im}, quad_tol);
        if (*cmd_distortion) return do_distortion(a, samples);
        if (*cmd_bgk)
            return do_bgk(d, s, p, a, omega, c_omega, v_norm, z_re_opt->count() > 0,
                          {z_re, z_im});
        if (*cmd_spectrum)
            return do_spectrum(d, n, length, s, to_potential_spec(pot), eps);
        if (*cmd_verify)
            return do_verify(lt::parse_theorem(theorem_name), {d, s, p, tau}, n, length,
                             to_potential_spec(vpot), eps, report_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
