#include "specbound/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "specbound/errors.hpp"

namespace specbound::config {

namespace lt = lieb_thirring;
namespace dz = discretize;
using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw validation_error(where + ": " + what);
}

const json& need(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) bad(where + "." + key, "required field is missing");
    return *it;
}

double num_at(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number()) bad(where + "." + key, "expected a number");
    return v.get<double>();
}

int int_at(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number_integer()) bad(where + "." + key, "expected an integer");
    return v.get<int>();
}

std::string str_at(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_string()) bad(where + "." + key, "expected a string");
    return v.get<std::string>();
}

la::cdouble complex_at(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        bad(where + "." + key, "expected [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

json complex_json(la::cdouble z) { return json::array({z.real(), z.imag()}); }

std::string kind_name(dz::PotentialKind k) {
    switch (k) {
        case dz::PotentialKind::gaussian: return "gaussian";
        case dz::PotentialKind::box: return "box";
        case dz::PotentialKind::random_bandlimited: return "random_bandlimited";
    }
    throw validation_error("unknown potential kind");
}

dz::PotentialKind parse_kind(const std::string& name, const std::string& where) {
    if (name == "gaussian") return dz::PotentialKind::gaussian;
    if (name == "box") return dz::PotentialKind::box;
    if (name == "random_bandlimited") return dz::PotentialKind::random_bandlimited;
    bad(where, "unknown potential kind \"" + name +
                   "\" (expected gaussian | box | random_bandlimited)");
}

dz::PotentialSpec parse_potential(const json& j, int d, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    dz::PotentialSpec spec;
    spec.kind = parse_kind(str_at(j, "kind", where), where + ".kind");
    spec.amplitude = complex_at(j, "amplitude", where);
    spec.width = num_at(j, "width", where);
    if (!(spec.width > 0.0)) bad(where + ".width", "must be positive");
    if (const auto it = j.find("center"); it != j.end()) {
        if (!it->is_array()) bad(where + ".center", "expected an array");
        for (const auto& c : *it) {
            if (!c.is_number()) bad(where + ".center", "expected numbers");
            spec.center.push_back(c.get<double>());
        }
        if (!spec.center.empty() && spec.center.size() != std::size_t(d))
            bad(where + ".center", "needs " + std::to_string(d) +
                                       " coordinates to match the dimension");
    }
    if (spec.kind == dz::PotentialKind::random_bandlimited) {
        const json& v = need(j, "seed", where);
        if (!v.is_number_unsigned()) bad(where + ".seed", "expected an unsigned integer");
        spec.seed = v.get<std::uint64_t>();
    } else if (const auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned()) bad(where + ".seed", "expected an unsigned integer");
        spec.seed = it->get<std::uint64_t>();
    }
    return spec;
}

JobSpec parse_job(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where, "expected an object");
    JobSpec job;
    try {
        job.theorem = lt::parse_theorem(str_at(j, "theorem", where));
    } catch (const validation_error& e) {
        bad(where + ".theorem", e.what());
    }
    job.params.d = int_at(j, "d", where);
    job.params.s = num_at(j, "s", where);
    job.params.p = num_at(j, "p", where);
    job.params.tau = num_at(j, "tau", where);
    try {
        lt::validate(job.theorem, job.params);
    } catch (const std::exception& e) {
        bad(where, e.what());
    }
    const json& grid = need(j, "grid", where);
    if (!grid.is_object()) bad(where + ".grid", "expected an object");
    job.n = int_at(grid, "n", where + ".grid");
    job.length = num_at(grid, "length", where + ".grid");
    try {
        dz::Grid probe(job.params.d, job.n, job.length);
    } catch (const std::exception& e) {
        bad(where + ".grid", e.what());
    }
    job.potential = parse_potential(need(j, "potential", where), job.params.d,
                                    where + ".potential");
    if (const auto it = j.find("eps"); it != j.end()) {
        if (!it->is_number()) bad(where + ".eps", "expected a number");
        job.eps = it->get<double>();
        if (!(job.eps > 0.0)) bad(where + ".eps", "must be positive");
    }
    return job;
}

json potential_json(const dz::PotentialSpec& spec) {
    json j;
    j["kind"] = kind_name(spec.kind);
    j["amplitude"] = complex_json(spec.amplitude);
    j["width"] = spec.width;
    j["center"] = spec.center;
    j["seed"] = spec.seed;
    return j;
}

json job_json(const JobSpec& job) {
    json j;
    j["theorem"] = lt::to_string(job.theorem);
    j["d"] = job.params.d;
    j["s"] = job.params.s;
    j["p"] = job.params.p;
    j["tau"] = job.params.tau;
    j["grid"] = {{"n", job.n}, {"length", job.length}};
    j["potential"] = potential_json(job.potential);
    j["eps"] = job.eps;
    return j;
}

std::string job_file_name(std::size_t index) {
    std::ostringstream name;
    name << "job_";
    if (index < 100) name << (index < 10 ? "00" : "0");
    name << index << "_report.json";
    return name.str();
}

}  // namespace

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string config_hash(const RunConfig& config) {
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0')
        << fnv1a(serialize_config(config));
    return hex.str();
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("config", "expected a JSON object");
    RunConfig config;
    config.version = int_at(j, "version", "config");
    if (config.version != schema_version)
        bad("config.version", "unsupported version " + std::to_string(config.version) +
                                  " (this toolkit reads version " +
                                  std::to_string(schema_version) + ")");
    const json& jobs = need(j, "jobs", "config");
    if (!jobs.is_array()) bad("config.jobs", "expected an array");
    for (std::size_t i = 0; i < jobs.size(); ++i)
        config.jobs.push_back(parse_job(jobs[i], "jobs[" + std::to_string(i) + "]"));
    if (const auto it = j.find("output_dir"); it != j.end()) {
        if (!it->is_string()) bad("config.output_dir", "expected a string");
        config.output_dir = it->get<std::string>();
    }
    if (const auto it = j.find("workers"); it != j.end()) {
        if (!it->is_number_integer()) bad("config.workers", "expected an integer");
        config.workers = it->get<int>();
        if (config.workers < 1) bad("config.workers", "must be at least 1");
    }
    if (const auto it = j.find("quad_tol"); it != j.end()) {
        if (!it->is_number()) bad("config.quad_tol", "expected a number");
        config.quad_tol = it->get<double>();
        if (!(config.quad_tol > 0.0)) bad("config.quad_tol", "must be positive");
    }
    return config;
}

std::string serialize_config(const RunConfig& config) {
    json j;
    j["version"] = config.version;
    j["output_dir"] = config.output_dir;
    j["workers"] = config.workers;
    j["quad_tol"] = config.quad_tol;
    j["jobs"] = json::array();
    for (const JobSpec& job : config.jobs) j["jobs"].push_back(job_json(job));
    return j.dump();
}

std::string serialize_report(const lt::VerificationReport& report) {
    json j;
    j["theorem"] = lt::to_string(report.theorem);
    j["params"] = {{"d", report.params.d},
                   {"s", report.params.s},
                   {"p", report.params.p},
                   {"tau", report.params.tau}};
    j["grid"] = {{"d", report.grid.d},
                 {"n", report.grid.n},
                 {"length", report.grid.length}};
    j["potential"] =
        report.potential ? potential_json(*report.potential) : json(nullptr);
    j["v_norm_p"] = report.v_norm_p;
    j["omega"] = {{"omega", report.omega.omega},
                  {"eta", report.omega.eta},
                  {"c_omega", report.omega.c_omega}};
    j["exponents"] = {
        {"q", report.exponent_spec.q},
        {"alpha", report.exponent_spec.alpha},
        {"beta", report.exponent_spec.beta},
        {"form", report.exponent_spec.form == lt::DenominatorForm::power_split
                     ? "power_split"
                     : "uniform"}};
    j["constants"] = {{"case", lt::case_label(report.constants.case_id)},
                      {"j", report.constants.j},
                      {"gamma_p", report.constants.gamma_p},
                      {"omega", report.constants.omega},
                      {"c_omega", report.constants.c_omega},
                      {"integral", report.constants.integral},
                      {"delta", report.constants.delta},
                      {"k1", report.constants.k1},
                      {"k2", report.constants.k2},
                      {"k4", report.constants.k4},
                      {"k5", report.constants.k5},
                      {"explicit_factor", report.constants.explicit_factor}};
    j["candidates"] = json::array();
    for (const la::cdouble z : report.candidates)
        j["candidates"].push_back(complex_json(z));
    j["eigenvalue_count"] = report.eigenvalue_count;
    j["excluded"] = report.excluded;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["ratio"] = report.ratio;
    j["margin"] = report.margin;
    j["verdict"] = lt::to_string(report.verdict);
    return j.dump();
}

std::string serialize_manifest(const RunManifest& manifest) {
    json j;
    j["version"] = manifest.version;
    j["config_hash"] = manifest.config_hash;
    j["jobs"] = json::array();
    for (const JobResult& r : manifest.jobs)
        j["jobs"].push_back({{"index", r.index},
                             {"status", r.status},
                             {"message", r.message},
                             {"report_path", r.report_path},
                             {"wall_seconds", r.wall_seconds}});
    return j.dump();
}

std::string resolve_output_dir(const RunConfig& config) {
    if (!config.output_dir.empty()) return config.output_dir;
    if (const char* env = std::getenv(output_dir_env); env && *env) return env;
    return ".";
}

RunManifest run_jobs(const RunConfig& config) {
    namespace fs = std::filesystem;
    const fs::path dir = resolve_output_dir(config);
    fs::create_directories(dir);

    RunManifest manifest;
    manifest.config_hash = config_hash(config);
    manifest.jobs.resize(config.jobs.size());

    std::atomic<std::size_t> next{0};
    std::mutex io;
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= config.jobs.size()) return;
            JobResult& out = manifest.jobs[i];
            out.index = i;
            const auto start = std::chrono::steady_clock::now();
            try {
                const JobSpec& job = config.jobs[i];
                const dz::Grid grid(job.params.d, job.n, job.length);
                const dz::Potential v(grid, job.potential);
                const auto report =
                    lt::verify(job.theorem, grid, job.params, v, job.eps);
                const fs::path path = dir / job_file_name(i);
                const std::string text = serialize_report(report);
                {
                    const std::lock_guard<std::mutex> lock(io);
                    std::ofstream file(path, std::ios::binary | std::ios::trunc);
                    file << text << '\n';
                    if (!file) throw resource_error("cannot write " + path.string());
                }
                out.status = lt::to_string(report.verdict);
                out.report_path = path.string();
            } catch (const std::exception& e) {
                out.status = "error";
                out.message = e.what();
            }
            out.wall_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
        }
    };

    const std::size_t pool =
        std::min<std::size_t>(std::size_t(config.workers), config.jobs.size());
    if (pool <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(pool);
        for (std::size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (std::thread& t : threads) t.join();
    }

    std::ofstream file(dir / "manifest.json", std::ios::binary | std::ios::trunc);
    file << serialize_manifest(manifest) << '\n';
    if (!file) throw resource_error("cannot write " + (dir / "manifest.json").string());
    return manifest;
}

int exit_code(const RunManifest& manifest) {
    for (const JobResult& r : manifest.jobs)
        if (r.status == "error" || r.status == to_string(lt::Verdict::violated))
            return 1;
    return 0;
}

}  // namespace specbound::config
