#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "specbound/config.hpp"
#include "specbound/discretize.hpp"
#include "specbound/errors.hpp"
#include "specbound/lieb_thirring.hpp"

namespace cfg = specbound::config;
namespace lt = specbound::lieb_thirring;
namespace dz = specbound::discretize;

namespace {

std::string minimal_config() {
    return R"({
        "version": 1,
        "jobs": [
            {"theorem": "T2", "d": 1, "s": 0.5, "p": 2.0, "tau": 0.1,
             "grid": {"n": 16, "length": 8.0},
             "potential": {"kind": "gaussian", "amplitude": [0.4, 0.3], "width": 1.0}}
        ]
    })";
}

// the same config with one snippet swapped in
std::string variant(const std::string& from, const std::string& to) {
    std::string text = minimal_config();
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const char* tag) {
        path = std::filesystem::temp_directory_path() /
               (std::string("specbound_test_") + tag);
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("fnv1a matches the published test vectors") {
    CHECK(cfg::fnv1a("") == 0xcbf29ce484222325ull);
    CHECK(cfg::fnv1a("a") == 0xaf63dc4c8601ec8cull);
    CHECK(cfg::fnv1a("foobar") == 0x85944171f73967e8ull);
}

TEST_CASE("minimal config parses with defaults applied") {
    const cfg::RunConfig config = cfg::parse_config(minimal_config());
    CHECK(config.version == 1);
    CHECK(config.output_dir.empty());
    CHECK(config.workers == 1);
    CHECK(config.quad_tol == 1e-10);
    REQUIRE(config.jobs.size() == 1);
    const cfg::JobSpec& job = config.jobs[0];
    CHECK(job.theorem == lt::Theorem::t2);
    CHECK(job.params.d == 1);
    CHECK(job.params.s == 0.5);
    CHECK(job.params.p == 2.0);
    CHECK(job.params.tau == 0.1);
    CHECK(job.n == 16);
    CHECK(job.length == 8.0);
    CHECK(job.potential.kind == dz::PotentialKind::gaussian);
    CHECK(job.potential.amplitude == specbound::la::cdouble{0.4, 0.3});
    CHECK(job.potential.width == 1.0);
    CHECK(job.potential.center.empty());
    CHECK(job.eps == 1e-8);
}

TEST_CASE("serialization round-trips and is canonical") {
    const cfg::RunConfig config = cfg::parse_config(minimal_config());
    const std::string once = cfg::serialize_config(config);
    const cfg::RunConfig reparsed = cfg::parse_config(once);
    CHECK(cfg::serialize_config(reparsed) == once);
    CHECK(cfg::config_hash(reparsed) == cfg::config_hash(config));
    CHECK(cfg::config_hash(config).size() == 16);

    // formatting of the input must not leak into the hash
    const cfg::RunConfig respaced = cfg::parse_config(
        variant("\"version\": 1", "\"version\":    1") + "  \n");
    CHECK(cfg::config_hash(respaced) == cfg::config_hash(config));
}

TEST_CASE("validation errors name the offending field") {
    const auto message = [](const std::string& text) {
        try {
            cfg::parse_config(text);
        } catch (const specbound::validation_error& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };

    CHECK(message("{ nope") .find("not valid JSON") != std::string::npos);
    CHECK(message(variant("\"version\": 1", "\"version\": 3"))
              .find("config.version") != std::string::npos);
    CHECK(message(variant("\"theorem\": \"T2\"", "\"theorem\": \"T9\""))
              .find("jobs[0].theorem") != std::string::npos);
    CHECK(message(variant("\"tau\": 0.1", "\"tau\": -0.1")).find("jobs[0]") !=
          std::string::npos);
    CHECK(message(variant(", \"tau\": 0.1", ""))
              .find("jobs[0].tau: required") != std::string::npos);
    CHECK(message(variant("\"n\": 16", "\"n\": 10")).find("jobs[0].grid") !=
          std::string::npos);
    CHECK(message(variant("\"width\": 1.0", "\"width\": -2.0"))
              .find("jobs[0].potential.width") != std::string::npos);
    CHECK(message(variant("\"kind\": \"gaussian\"", "\"kind\": \"wavelet\""))
              .find("jobs[0].potential.kind") != std::string::npos);
    CHECK(message(variant("\"kind\": \"gaussian\"", "\"kind\": \"random_bandlimited\""))
              .find("jobs[0].potential.seed") != std::string::npos);
    CHECK(message(variant("\"amplitude\": [0.4, 0.3]", "\"amplitude\": 0.4"))
              .find("jobs[0].potential.amplitude") != std::string::npos);

    // inadmissible hypotheses are caught at parse time with the condition named
    const std::string inadmissible = message(
        variant("\"theorem\": \"T2\", \"d\": 1, \"s\": 0.5, \"p\": 2.0",
                "\"theorem\": \"T1\", \"d\": 1, \"s\": 0.5, \"p\": 0.8"));
    CHECK(inadmissible.find("jobs[0]") != std::string::npos);
    CHECK(inadmissible.find("p") != std::string::npos);

    CHECK(message(variant("\"version\": 1", "\"version\": 1, \"workers\": 0"))
              .find("config.workers") != std::string::npos);
    CHECK(message(variant("\"version\": 1", "\"version\": 1, \"quad_tol\": 0"))
              .find("config.quad_tol") != std::string::npos);
}

TEST_CASE("center length must match the dimension") {
    CHECK_THROWS_AS(
        cfg::parse_config(variant("\"width\": 1.0", "\"width\": 1.0, \"center\": [0.5, 0.5]")),
        specbound::validation_error);
    const cfg::RunConfig ok = cfg::parse_config(
        variant("\"width\": 1.0", "\"width\": 1.0, \"center\": [0.5]"));
    CHECK(ok.jobs[0].potential.center == std::vector<double>{0.5});
}

TEST_CASE("reports carry no timings and serialize complex values as pairs") {
    const dz::Grid grid(1, 16, 8.0);
    dz::PotentialSpec spec;
    spec.amplitude = {0.4, 0.3};
    const dz::Potential v(grid, spec);
    const auto report = lt::verify(lt::Theorem::t2, grid, {1, 0.5, 2.0, 0.1}, v, 1e-8);
    const std::string text = cfg::serialize_report(report);
    CHECK(text.find("wall") == std::string::npos);
    CHECK(text.find("\"amplitude\":[0.4,0.3]") != std::string::npos);
    CHECK(text.find("\"verdict\"") != std::string::npos);
    CHECK(text.find("\"candidates\":[[") != std::string::npos);
}

TEST_CASE("identical runs produce identical reports and manifests differ only in timings") {
    TempDir dir_a("run_a");
    TempDir dir_b("run_b");
    const std::string base = minimal_config();

    cfg::RunConfig config_a = cfg::parse_config(base);
    config_a.output_dir = dir_a.path.string();
    cfg::RunConfig config_b = cfg::parse_config(base);
    config_b.output_dir = dir_b.path.string();

    const cfg::RunManifest man_a = cfg::run_jobs(config_a);
    const cfg::RunManifest man_b = cfg::run_jobs(config_b);

    REQUIRE(man_a.jobs.size() == 1);
    CHECK(man_a.jobs[0].status == "holds");
    CHECK(man_a.jobs[0].wall_seconds > 0.0);
    CHECK(slurp(dir_a.path / "job_000_report.json") ==
          slurp(dir_b.path / "job_000_report.json"));

    // output_dir differs, so the hashes differ; strip it and they agree
    cfg::RunConfig stripped_a = config_a;
    cfg::RunConfig stripped_b = config_b;
    stripped_a.output_dir.clear();
    stripped_b.output_dir.clear();
    CHECK(cfg::config_hash(stripped_a) == cfg::config_hash(stripped_b));

    CHECK(std::filesystem::exists(dir_a.path / "manifest.json"));
    CHECK(cfg::exit_code(man_a) == 0);
}

TEST_CASE("a failing job is recorded without losing the others") {
    TempDir dir("partial");
    cfg::RunConfig config = cfg::parse_config(minimal_config());
    config.output_dir = dir.path.string();
    config.workers = 4;

    // two good copies plus one broken after parsing: a negative threshold
    // makes the pipeline throw for that job alone
    config.jobs.push_back(config.jobs[0]);
    config.jobs.push_back(config.jobs[0]);
    config.jobs[2].eps = -1.0;

    const cfg::RunManifest manifest = cfg::run_jobs(config);
    REQUIRE(manifest.jobs.size() == 3);
    CHECK(manifest.jobs[0].status == "holds");
    CHECK(manifest.jobs[1].status == "holds");
    CHECK(manifest.jobs[2].status == "error");
    CHECK(!manifest.jobs[2].message.empty());
    CHECK(manifest.jobs[2].report_path.empty());
    CHECK(std::filesystem::exists(dir.path / "job_000_report.json"));
    CHECK(std::filesystem::exists(dir.path / "job_001_report.json"));
    CHECK(!std::filesystem::exists(dir.path / "job_002_report.json"));
    CHECK(std::filesystem::exists(dir.path / "manifest.json"));
    CHECK(cfg::exit_code(manifest) == 1);

    const std::string written = slurp(dir.path / "manifest.json");
    CHECK(written.find("\"status\":\"error\"") != std::string::npos);
}

TEST_CASE("manifest serialization carries version, hash, and per-job entries") {
    cfg::RunManifest manifest;
    manifest.config_hash = "0123456789abcdef";
    manifest.jobs.push_back({0, "holds", "", "a/job_000_report.json", 0.25});
    const std::string text = cfg::serialize_manifest(manifest);
    CHECK(text.find("\"version\":\"0.1.0\"") != std::string::npos);
    CHECK(text.find("\"config_hash\":\"0123456789abcdef\"") != std::string::npos);
    CHECK(text.find("\"wall_seconds\":0.25") != std::string::npos);
}

TEST_CASE("output directory resolution prefers config, then environment") {
    cfg::RunConfig config;
    config.output_dir = "explicit";
    CHECK(cfg::resolve_output_dir(config) == "explicit");

    config.output_dir.clear();
    setenv(cfg::output_dir_env, "/tmp/from_env", 1);
    CHECK(cfg::resolve_output_dir(config) == "/tmp/from_env");
    unsetenv(cfg::output_dir_env);
    CHECK(cfg::resolve_output_dir(config) == ".");
}
