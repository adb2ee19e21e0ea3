#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arena/gateway.hpp"
#include "arena/reinvent.hpp"

namespace arena {

struct SandboxSettings {
    std::string runtime = "python3";
    double grace_s = 0.5;
    uint64_t stdout_cap_bytes = 1ULL << 20;
    std::string scratch_root;
};

// One structured config document drives a reproducible run; string values
// support ${ENV_VAR} interpolation so secrets stay out of the file.
struct RunConfig {
    std::vector<ModelEndpoint> endpoints;
    SandboxSettings sandbox;
    int trials = 128;
    int max_rounds = 30;
    int worker_width = 4;
    uint64_t seed = 0;
    std::filesystem::path output_dir = "runs";

    const ModelEndpoint& endpoint_for(ModelRole role) const;
    bool has_endpoint(ModelRole role) const;
};

RunConfig load_config(const std::filesystem::path& path);

// Round-interval token statistics behind the thought-collapse analysis.
struct CollapseProfile {
    struct Bucket {
        int lo = 0;
        int hi = 0;
        double mean_output_tokens = 0;
        size_t count = 0;
    };
    std::vector<Bucket> buckets;  // intervals partition [1, max_rounds]
    std::optional<double> mean_success_round;
};

CollapseProfile collapse_profile(const std::vector<Trajectory>& trajectories, int interval);

struct ReportRow {
    std::string algo;
    std::string variant_set_hash;
    int hint = 0;
    std::string verifier;
    size_t n = 0;
    double rsr = 0;
    std::optional<double> mean_success_round;
    uint64_t total_output_tokens = 0;
    size_t total_rounds = 0;
};

struct FrReportRow {
    std::string algo;
    double fr = 0;
    size_t probes = 0;
    int reps = 0;
};

struct Report {
    std::vector<ReportRow> rows;       // one per cohort, sorted by key
    std::vector<FrReportRow> fr_rows;  // present when forget-eval results exist
    std::vector<std::string> corrupt_logs;

    std::string to_text() const;
    std::string to_json() const;  // byte-stable for identical inputs
};

// Aggregates completed run directories: cohort rows keyed by
// (algo, variant-set hash, hint, verifier), FR tables when present.
// Corrupt trajectory files are skipped and listed.
Report aggregate_report(const std::vector<std::filesystem::path>& run_dirs);

// Reads every parseable trajectory in a run directory (sorted by filename).
std::vector<Trajectory> read_run_trajectories(const std::filesystem::path& run_dir,
                                              std::vector<std::string>* corrupt = nullptr);

}  // namespace arena
