// Batch-run configuration and reporting: JSON parsing with field-precise
// validation, canonical deterministic serialization, FNV-1a config hashing,
// and a bounded-worker runner that persists one report per job plus a
// manifest.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "specbound/discretize.hpp"
#include "specbound/lieb_thirring.hpp"

namespace specbound::config {

inline constexpr const char* toolkit_version = "0.1.0";
inline constexpr int schema_version = 1;

// Default output directory when the config leaves output_dir empty.
inline constexpr const char* output_dir_env = "SPECBOUND_OUTPUT_DIR";

struct JobSpec {
    lieb_thirring::Theorem theorem = lieb_thirring::Theorem::t2;
    lieb_thirring::SpectralParams params{};
    int n = 32;
    double length = 10.0;
    discretize::PotentialSpec potential{};
    double eps = 1e-8;  // discrete-candidate threshold
};

struct RunConfig {
    int version = schema_version;
    std::vector<JobSpec> jobs;
    std::string output_dir;  // empty: env override, then "."
    int workers = 1;
    double quad_tol = 1e-10;  // reserved for quadrature-backed subcommands
};

// FNV-1a over the canonical serialization, 16 lowercase hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string config_hash(const RunConfig&);

// Parses and fully validates a config. Errors are validation_error naming
// the offending field (e.g. "jobs[2].potential.seed: required for the
// random kind"); job admissibility failures carry the violated hypothesis.
RunConfig parse_config(const std::string& text);

// Canonical form: every field materialized, keys sorted, no whitespace,
// complex numbers as [re, im]. parse_config(serialize_config(c)) round-trips.
std::string serialize_config(const RunConfig&);

// Deterministic report JSON. Timings are deliberately absent (they live in
// the manifest) so byte-identical runs produce byte-identical reports.
std::string serialize_report(const lieb_thirring::VerificationReport&);

struct JobResult {
    std::size_t index = 0;
    std::string status;       // verdict name, or "error"
    std::string message;      // failure detail, empty otherwise
    std::string report_path;  // empty when the job failed before reporting
    double wall_seconds = 0.0;
};

struct RunManifest {
    std::string version = toolkit_version;
    std::string config_hash;
    std::vector<JobResult> jobs;
};

std::string serialize_manifest(const RunManifest&);

std::string resolve_output_dir(const RunConfig&);

// Runs every job on a pool of at most config.workers threads, writing
// job_NNN_report.json per finished job and manifest.json at the end. A job
// that throws is recorded as status "error"; completed reports stay on disk.
RunManifest run_jobs(const RunConfig&);

// 0 when every job holds (or is property-only), 1 on any violation or
// failed job. Usage and config errors exit 2 before a manifest exists.
int exit_code(const RunManifest&);

}  // namespace specbound::config
