#include "arena/analytics.hpp"

#include <algorithm>
#include <cstdio>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

using nlohmann::json;

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

namespace {

std::string interpolate_env(const std::string& value) {
    std::string out;
    size_t pos = 0;
    while (pos < value.size()) {
        const size_t open = value.find("${", pos);
        if (open == std::string::npos) {
            out += value.substr(pos);
            break;
        }
        const size_t close = value.find('}', open + 2);
        if (close == std::string::npos) {
            out += value.substr(pos);
            break;
        }
        out += value.substr(pos, open - pos);
        const std::string name = value.substr(open + 2, close - open - 2);
        auto v = env_var(name);
        if (!v) throw ConfigError("config references unset environment variable " + name);
        out += *v;
        pos = close + 1;
    }
    return out;
}

std::string get_interp(const json& j, const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    return interpolate_env(j.at(key).get<std::string>());
}

}  // namespace

const ModelEndpoint& RunConfig::endpoint_for(ModelRole role) const {
    for (const auto& ep : endpoints) {
        if (ep.role == role) return ep;
    }
    throw ConfigError("config has no endpoint for role " + std::string(model_role_name(role)));
}

bool RunConfig::has_endpoint(ModelRole role) const {
    for (const auto& ep : endpoints) {
        if (ep.role == role) return true;
    }
    return false;
}

RunConfig load_config(const fs::path& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const std::exception& e) {
        throw ConfigError("cannot parse config " + path.string() + ": " + e.what());
    }
    RunConfig cfg;
    if (j.contains("endpoints")) {
        for (const auto& e : j["endpoints"]) {
            ModelEndpoint ep;
            ep.role = model_role_from_name(e.at("role").get<std::string>());
            ep.base_url = get_interp(e, "base_url", "");
            if (ep.base_url.empty()) throw ConfigError("endpoint lacks base_url");
            // Relative mock script paths resolve against the config file.
            const std::string mock_prefix = "mock://";
            if (ep.base_url.rfind(mock_prefix, 0) == 0) {
                fs::path script = ep.base_url.substr(mock_prefix.size());
                if (script.is_relative()) {
                    script = path.parent_path() / script;
                }
                ep.base_url = mock_prefix + script.string();
            }
            ep.model_name = get_interp(e, "model_name", "unnamed");
            ep.api_key_env = e.value("api_key_env", "");
            ep.temperature = e.value("temperature", 1.0);
            ep.max_context_tokens = e.value("max_context_tokens", uint64_t{60000});
            ep.rate_limit_rps = e.value("rate_limit_rps", 0.0);
            ep.max_retries = e.value("max_retries", 3);
            ep.retry_base_delay_s = e.value("retry_base_delay_s", 0.5);
            cfg.endpoints.push_back(std::move(ep));
        }
    }
    if (j.contains("sandbox")) {
        const auto& s = j["sandbox"];
        cfg.sandbox.runtime = get_interp(s, "runtime", cfg.sandbox.runtime);
        cfg.sandbox.grace_s = s.value("grace_s", cfg.sandbox.grace_s);
        cfg.sandbox.stdout_cap_bytes = s.value("stdout_cap_bytes", cfg.sandbox.stdout_cap_bytes);
        cfg.sandbox.scratch_root = get_interp(s, "scratch_root", cfg.sandbox.scratch_root);
    }
    if (j.contains("defaults")) {
        const auto& d = j["defaults"];
        cfg.trials = d.value("trials", cfg.trials);
        cfg.max_rounds = d.value("max_rounds", cfg.max_rounds);
        cfg.worker_width = d.value("workers", cfg.worker_width);
        cfg.seed = d.value("seed", cfg.seed);
        if (d.contains("output_dir")) cfg.output_dir = d["output_dir"].get<std::string>();
    }
    if (cfg.trials < 1 || cfg.max_rounds < 1 || cfg.worker_width < 1) {
        throw ConfigError("trials, max_rounds, and workers must all be positive");
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Collapse profile
// ---------------------------------------------------------------------------

CollapseProfile collapse_profile(const std::vector<Trajectory>& trajectories, int interval) {
    if (interval < 1) throw ConfigError("collapse_profile: interval must be >= 1");
    if (trajectories.empty()) throw EmptyInput("collapse_profile: no trajectories");
    int max_round = 0;
    for (const auto& t : trajectories) {
        max_round = std::max(max_round, static_cast<int>(t.rounds.size()));
    }
    if (max_round == 0) throw EmptyInput("collapse_profile: trajectories have no rounds");

    CollapseProfile profile;
    for (int lo = 1; lo <= max_round; lo += interval) {
        CollapseProfile::Bucket b;
        b.lo = lo;
        b.hi = std::min(lo + interval - 1, max_round);
        profile.buckets.push_back(b);
    }
    std::vector<double> sums(profile.buckets.size(), 0);
    for (const auto& t : trajectories) {
        for (size_t r = 0; r < t.rounds.size(); ++r) {
            const size_t bucket = r / static_cast<size_t>(interval);
            sums[bucket] += static_cast<double>(t.rounds[r].turn.output_tokens);
            profile.buckets[bucket].count += 1;
        }
    }
    for (size_t i = 0; i < profile.buckets.size(); ++i) {
        if (profile.buckets[i].count > 0) {
            profile.buckets[i].mean_output_tokens =
                sums[i] / static_cast<double>(profile.buckets[i].count);
        }
    }
    size_t successes = 0;
    double round_sum = 0;
    for (const auto& t : trajectories) {
        if (t.outcome == Outcome::Success) {
            ++successes;
            round_sum += t.success_round;
        }
    }
    if (successes > 0) {
        profile.mean_success_round = round_sum / static_cast<double>(successes);
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Report aggregation
// ---------------------------------------------------------------------------

std::vector<Trajectory> read_run_trajectories(const fs::path& run_dir,
                                              std::vector<std::string>* corrupt) {
    std::vector<fs::path> files;
    const fs::path trials = run_dir / "trials";
    if (fs::exists(trials)) {
        for (const auto& entry : fs::directory_iterator(trials)) {
            if (entry.path().extension() == ".jsonl") files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<Trajectory> out;
    for (const auto& f : files) {
        try {
            out.push_back(read_trajectory(f));
        } catch (const ArenaError&) {
            if (corrupt) corrupt->push_back(f.string());
        }
    }
    return out;
}

Report aggregate_report(const std::vector<fs::path>& run_dirs) {
    Report report;
    struct Agg {
        size_t n = 0;
        size_t successes = 0;
        double round_sum = 0;
        uint64_t tokens = 0;
        size_t rounds = 0;
    };
    std::map<std::tuple<std::string, std::string, int, std::string>, Agg> groups;

    for (const auto& dir : run_dirs) {
        std::string variant_hash = "unknown";
        const fs::path meta_path = dir / "run.json";
        if (fs::exists(meta_path)) {
            json meta = json::parse(read_file(meta_path), nullptr, false);
            if (!meta.is_discarded()) {
                variant_hash = meta.value("variant_set_hash", "unknown");
            }
        }
        std::vector<std::string> corrupt;
        const auto trajectories = read_run_trajectories(dir, &corrupt);
        for (const auto& c : corrupt) report.corrupt_logs.push_back(c);
        for (const auto& t : trajectories) {
            if (t.aborted || !t.complete) continue;  // only completed trials count
            auto& agg = groups[{std::string(algorithm_name(t.algo)), variant_hash,
                                static_cast<int>(t.hint),
                                std::string(verifier_mode_name(t.verifier))}];
            agg.n += 1;
            agg.rounds += t.rounds.size();
            for (const auto& r : t.rounds) agg.tokens += r.turn.output_tokens;
            if (t.outcome == Outcome::Success) {
                agg.successes += 1;
                agg.round_sum += t.success_round;
            }
        }

        // Forget-eval results sit beside the trajectories when present.
        for (const auto& entry : fs::directory_iterator(dir)) {
            const std::string name = entry.path().filename().string();
            if (name.rfind("forget_eval", 0) != 0 || entry.path().extension() != ".json") {
                continue;
            }
            json fr = json::parse(read_file(entry.path()), nullptr, false);
            if (fr.is_discarded()) {
                report.corrupt_logs.push_back(entry.path().string());
                continue;
            }
            FrReportRow row;
            row.algo = fr.value("algo", "unknown");
            row.fr = fr.value("fr", 0.0);
            row.probes = fr.value("probes", size_t{0});
            row.reps = fr.value("reps", 0);
            report.fr_rows.push_back(std::move(row));
        }
    }

    for (const auto& [key, agg] : groups) {
        ReportRow row;
        row.algo = std::get<0>(key);
        row.variant_set_hash = std::get<1>(key);
        row.hint = std::get<2>(key);
        row.verifier = std::get<3>(key);
        row.n = agg.n;
        row.rsr = agg.n ? 100.0 * static_cast<double>(agg.successes) / static_cast<double>(agg.n)
                        : 0.0;
        if (agg.successes > 0) {
            row.mean_success_round = agg.round_sum / static_cast<double>(agg.successes);
        }
        row.total_output_tokens = agg.tokens;
        row.total_rounds = agg.rounds;
        report.rows.push_back(std::move(row));
    }
    std::sort(report.fr_rows.begin(), report.fr_rows.end(),
              [](const auto& a, const auto& b) { return a.algo < b.algo; });
    std::sort(report.corrupt_logs.begin(), report.corrupt_logs.end());
    return report;
}

std::string Report::to_text() const {
    std::string out = "algo            hint  verifier  n     RSR%   mean_round  tokens\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%-15s %-5d %-9s %-5zu %-6.1f %-11s %llu\n",
                      r.algo.c_str(), r.hint, r.verifier.c_str(), r.n, r.rsr,
                      r.mean_success_round ? format_seconds3(*r.mean_success_round).c_str() : "-",
                      static_cast<unsigned long long>(r.total_output_tokens));
        out += buf;
    }
    if (!fr_rows.empty()) {
        out += "\nalgo            FR      probes  reps\n";
        for (const auto& r : fr_rows) {
            std::snprintf(buf, sizeof(buf), "%-15s %-7.3f %-7zu %d\n", r.algo.c_str(), r.fr,
                          r.probes, r.reps);
            out += buf;
        }
    }
    if (!corrupt_logs.empty()) {
        out += "\ncorrupt logs skipped:\n";
        for (const auto& c : corrupt_logs) out += "  " + c + "\n";
    }
    return out;
}

std::string Report::to_json() const {
    json j;
    j["rows"] = json::array();
    for (const auto& r : rows) {
        json row{{"algo", r.algo},
                 {"variant_set_hash", r.variant_set_hash},
                 {"hint", r.hint},
                 {"verifier", r.verifier},
                 {"n", r.n},
                 {"rsr", r.rsr},
                 {"total_output_tokens", r.total_output_tokens},
                 {"total_rounds", r.total_rounds}};
        if (r.mean_success_round) row["mean_success_round"] = *r.mean_success_round;
        j["rows"].push_back(std::move(row));
    }
    j["fr"] = json::array();
    for (const auto& r : fr_rows) {
        j["fr"].push_back({{"algo", r.algo}, {"fr", r.fr}, {"probes", r.probes}, {"reps", r.reps}});
    }
    j["corrupt_logs"] = corrupt_logs;
    return j.dump(2);
}

}  // namespace arena
