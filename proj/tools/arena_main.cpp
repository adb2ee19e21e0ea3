#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "arena/analytics.hpp"
#include "arena/errors.hpp"
#include "arena/taskgen.hpp"
#include "arena/unlearn.hpp"
#include "arena/util.hpp"

namespace fs = std::filesystem;
using namespace arena;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPartialAbort = 3;

fs::path default_config_path() {
    if (auto p = env_var("ARENA_CONFIG")) return *p;
    return fs::path(ARENA_SOURCE_DIR) / "configs" / "default.json";
}

Sandbox make_sandbox(const RunConfig& cfg) {
    SandboxConfig sc;
    sc.runtime_cmd = cfg.sandbox.runtime;
    sc.grace_s = cfg.sandbox.grace_s;
    sc.stdout_cap_bytes = cfg.sandbox.stdout_cap_bytes;
    sc.scratch_root = cfg.sandbox.scratch_root;
    return Sandbox(sc);
}

std::string bundle_hash(const fs::path& bundle) { return sha256_hex(read_file(bundle)); }

int cmd_gen_tasks(const RunConfig& cfg, const std::string& algo_name, int variants, uint64_t seed,
                  bool calibrate, int trials, const fs::path& output_dir) {
    const AlgorithmId algo = algorithm_from_name(algo_name);
    auto specs = generate_bundle(algo, variants, seed);
    fs::create_directories(output_dir);
    const fs::path bundle_path =
        output_dir / (std::string(algorithm_name(algo)) + ".bundle.jsonl");
    if (calibrate) {
        Sandbox sandbox = make_sandbox(cfg);
        CalibrationSettings settings;
        settings.trials = trials;
        auto report = calibrate_bundle(specs, sandbox, settings);
        write_file(output_dir / (std::string(algorithm_name(algo)) + ".calibration.json"),
                   report.to_json());
        std::cout << report.to_text();
        if (!report.all_sound()) return kExitFailure;
    }
    write_bundle(bundle_path, specs);
    std::cout << "wrote " << bundle_path.string() << " (" << specs.size() << " specs)\n";
    return kExitOk;
}

int cmd_calibrate(const RunConfig& cfg, const std::vector<std::string>& bundles, int trials,
                  const fs::path& output_dir) {
    Sandbox sandbox = make_sandbox(cfg);
    CalibrationSettings settings;
    settings.trials = trials;
    fs::create_directories(output_dir);
    CalibrationReport combined;
    for (const auto& b : bundles) {
        auto specs = read_bundle(b);
        auto report = calibrate_bundle(specs, sandbox, settings);
        for (auto& row : report.rows) combined.rows.push_back(std::move(row));
        const fs::path out = output_dir / (fs::path(b).stem().string() + ".calibrated.jsonl");
        write_bundle(out, specs);
    }
    write_file(output_dir / "calibration_report.json", combined.to_json());
    write_file(output_dir / "calibration_report.txt", combined.to_text());
    std::cout << combined.to_text();
    return combined.all_sound() ? kExitOk : kExitFailure;
}

int cmd_reinvent(const RunConfig& cfg, const std::string& bundle, int hint,
                 const std::string& verifier, int trials, int max_rounds, uint64_t seed,
                 int workers, const fs::path& output_dir) {
    auto specs = read_bundle(bundle);
    Sandbox sandbox = make_sandbox(cfg);
    Gateway gw;
    const ModelEndpoint& candidate = cfg.endpoint_for(ModelRole::Candidate);
    VerifierMode vmode = VerifierMode::none();
    if (verifier == "self") {
        vmode = VerifierMode::self();
    } else if (verifier == "oracle") {
        vmode = VerifierMode::oracle_model(cfg.endpoint_for(ModelRole::Verifier));
    } else if (verifier != "none") {
        throw ConfigError("verifier must be none, self, or oracle");
    }

    const std::string algo(algorithm_name(specs.front().algo));
    const fs::path run_dir = output_dir / ("run-" + algo + "-h" + std::to_string(hint) + "-" +
                                           verifier + "-s" + std::to_string(seed));
    fs::create_directories(run_dir);
    json meta{{"algo", algo},
              {"bundle", bundle},
              {"variant_set_hash", bundle_hash(bundle)},
              {"hint", hint},
              {"verifier", verifier},
              {"trials", trials},
              {"max_rounds", max_rounds},
              {"seed", seed}};
    write_file(run_dir / "run.json", meta.dump(2));

    CohortOptions copt;
    copt.trials = trials;
    copt.max_rounds = max_rounds;
    copt.seed = seed;
    copt.workers = workers;
    copt.output_dir = run_dir;
    auto result = run_cohort(gw, sandbox, specs, hint_level_from_int(hint), candidate, vmode, copt);

    if (!result.trajectories.empty()) {
        auto stat = compute_rsr(result.trajectories);
        std::printf("cohort: n=%zu RSR=%.1f%%", stat.n, stat.success_rate);
        if (stat.mean_success_round) {
            std::printf(" mean_success_round=%.2f", *stat.mean_success_round);
        }
        std::printf("\n");
    }
    std::cout << "run dir: " << run_dir.string() << "\n";
    if (result.aborted_trials > 0) {
        std::cerr << result.aborted_trials << " trial(s) aborted; partial trajectories kept\n";
        return kExitPartialAbort;
    }
    return kExitOk;
}

int cmd_forget_eval(const RunConfig& cfg, const std::string& algo_name, const std::string& probes,
                    int reps, const fs::path& output_dir) {
    const AlgorithmId algo = algorithm_from_name(algo_name);
    auto probe_items = read_probes(probes);
    Gateway gw;
    const ModelEndpoint& candidate = cfg.endpoint_for(ModelRole::Candidate);
    const ModelEndpoint& judge = cfg.endpoint_for(ModelRole::Judge);
    fs::create_directories(output_dir);
    const fs::path out =
        output_dir / ("forget_eval_" + std::string(algorithm_name(algo)) + ".json");

    json partial{{"algo", std::string(algorithm_name(algo))},
                 {"reps", reps},
                 {"probes", probe_items.size()},
                 {"complete", false},
                 {"per_probe", json::array()}};
    auto persist = [&](double fr_so_far) {
        partial["fr"] = fr_so_far;
        write_file(out, partial.dump(2));
    };
    size_t done = 0;
    double ones = 0;
    try {
        auto stat = eval_forgetting(gw, probe_items, algo, candidate, judge, reps,
                                    [&](size_t, const ProbeResult& pr) {
                                        ++done;
                                        ones += pr.y;
                                        partial["per_probe"].push_back(
                                            {{"labels", pr.labels}, {"y", pr.y}});
                                        persist(done ? ones / static_cast<double>(done) : 0.0);
                                    });
        partial["complete"] = true;
        partial["fr"] = stat.fr;
        write_file(out, partial.dump(2));
        std::printf("FR = %.4f over %zu probes (reps=%d)\n", stat.fr, stat.per_probe.size(), reps);
        return kExitOk;
    } catch (const TransportError& e) {
        std::cerr << "aborted mid-run: " << e.what() << "\n";
        return kExitPartialAbort;
    } catch (const GatewayError& e) {
        std::cerr << "aborted mid-run: " << e.what() << "\n";
        return kExitPartialAbort;
    }
}

int cmd_coldstart(const RunConfig& cfg, const std::string& algo_name,
                  const std::string& templates_path, uint64_t seed, const fs::path& output_dir) {
    const AlgorithmId algo = algorithm_from_name(algo_name);
    std::vector<std::string> templates;
    for (const auto& line : split_lines(read_file(templates_path))) {
        if (rstrip(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.contains("question")) {
            templates.push_back(j["question"].get<std::string>());
        } else {
            templates.push_back(line);
        }
    }
    Gateway gw;
    const ModelEndpoint& base = cfg.endpoint_for(ModelRole::Candidate);
    auto stats = synthesize_coldstart(gw, templates, algo, base, seed);
    fs::create_directories(output_dir);
    const fs::path out =
        output_dir / ("coldstart_" + std::string(algorithm_name(algo)) + ".jsonl");
    std::vector<InitPair> pairs = stats.pairs;
    write_pairs(out, pairs);
    std::printf("synthesized %zu pairs (%d dropped as empty survivors) -> %s\n", pairs.size(),
                stats.empty_survivors, out.string().c_str());
    return kExitOk;
}

int cmd_analyze(const std::vector<std::string>& run_dirs, int interval,
                const fs::path& output_dir) {
    std::vector<fs::path> dirs(run_dirs.begin(), run_dirs.end());
    auto report = aggregate_report(dirs);
    fs::create_directories(output_dir);
    write_file(output_dir / "report.json", report.to_json());
    write_file(output_dir / "report.txt", report.to_text());

    json collapse = json::object();
    for (const auto& dir : dirs) {
        auto trajectories = read_run_trajectories(dir);
        if (trajectories.empty()) continue;
        auto profile = collapse_profile(trajectories, interval);
        json buckets = json::array();
        for (const auto& b : profile.buckets) {
            buckets.push_back({{"lo", b.lo},
                               {"hi", b.hi},
                               {"mean_output_tokens", b.mean_output_tokens},
                               {"count", b.count}});
        }
        json entry{{"buckets", buckets}};
        if (profile.mean_success_round) entry["mean_success_round"] = *profile.mean_success_round;
        collapse[fs::path(dir).filename().string()] = entry;
    }
    write_file(output_dir / "collapse.json", collapse.dump(2));
    std::cout << report.to_text();
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arena: algorithm reinvention experiment harness"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are valid after the subcommand too

    std::string config_path = default_config_path().string();
    uint64_t seed = 0;
    std::string output_dir = "out";
    app.add_option("--config", config_path, "Config file (JSON)");
    app.add_option("--seed", seed, "Run seed");
    app.add_option("--output-dir", output_dir, "Output directory");

    auto* gen = app.add_subcommand("gen-tasks", "Generate task bundles");
    std::string gen_algo;
    int gen_variants = 8;
    bool gen_calibrate = false;
    int gen_trials = 3;
    gen->add_option("--algo", gen_algo, "Algorithm id")->required();
    gen->add_option("--variants", gen_variants, "Variant count");
    gen->add_flag("--calibrate", gen_calibrate, "Calibrate limits via the sandbox");
    gen->add_option("--trials", gen_trials, "Calibration timing trials");

    auto* cal = app.add_subcommand("calibrate", "Calibrate limits for existing bundles");
    std::vector<std::string> cal_bundles;
    int cal_trials = 3;
    cal->add_option("--bundle", cal_bundles, "Bundle file(s)")->required();
    cal->add_option("--trials", cal_trials, "Timing trials per spec");

    auto* rei = app.add_subcommand("reinvent", "Run a reinvention cohort");
    std::string rei_bundle, rei_verifier = "none";
    int rei_hint = 0, rei_trials = 128, rei_rounds = 30, rei_workers = 0;
    rei->add_option("--bundle", rei_bundle, "Task bundle")->required();
    rei->add_option("--hint", rei_hint, "Hint level 0|1|2")->check(CLI::Range(0, 2));
    rei->add_option("--verifier", rei_verifier, "none|self|oracle");
    rei->add_option("--trials", rei_trials, "Total trials (split across variants)");
    rei->add_option("--max-rounds", rei_rounds, "Round cap per trial");
    rei->add_option("--workers", rei_workers, "Worker pool width (default from config)");

    auto* fev = app.add_subcommand("forget-eval", "Evaluate the forgetting rate");
    std::string fev_algo, fev_probes;
    int fev_reps = 5;
    fev->add_option("--algo", fev_algo, "Algorithm id")->required();
    fev->add_option("--probes", fev_probes, "Probe JSONL file")->required();
    fev->add_option("--reps", fev_reps, "Judge repetitions per answer");

    auto* cold = app.add_subcommand("coldstart-gen", "Synthesize cold-start pairs");
    std::string cold_algo, cold_templates;
    cold->add_option("--algo", cold_algo, "Algorithm id")->required();
    cold->add_option("--templates", cold_templates, "Template file (JSONL or plain lines)")
        ->required();

    auto* ana = app.add_subcommand("analyze", "Aggregate run directories into a report");
    std::vector<std::string> ana_dirs;
    int ana_interval = 3;
    ana->add_option("dirs", ana_dirs, "Run directories")->required();
    ana->add_option("--interval", ana_interval, "Collapse bucket width in rounds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        RunConfig cfg;
        if (fs::exists(config_path)) {
            cfg = load_config(config_path);
        } else if (rei->parsed() || fev->parsed() || cold->parsed() || gen_calibrate ||
                   cal->parsed()) {
            throw ConfigError("config file not found: " + config_path);
        }
        const bool seed_given = app.count("--seed") > 0;
        const uint64_t run_seed = seed_given ? seed : cfg.seed;
        const fs::path out_dir = output_dir;

        if (gen->parsed()) {
            return cmd_gen_tasks(cfg, gen_algo, gen_variants, run_seed, gen_calibrate, gen_trials,
                                 out_dir);
        }
        if (cal->parsed()) {
            return cmd_calibrate(cfg, cal_bundles, cal_trials, out_dir);
        }
        if (rei->parsed()) {
            const int workers = rei_workers > 0 ? rei_workers : cfg.worker_width;
            return cmd_reinvent(cfg, rei_bundle, rei_hint, rei_verifier, rei_trials, rei_rounds,
                                run_seed, workers, out_dir);
        }
        if (fev->parsed()) {
            return cmd_forget_eval(cfg, fev_algo, fev_probes, fev_reps, out_dir);
        }
        if (cold->parsed()) {
            return cmd_coldstart(cfg, cold_algo, cold_templates, run_seed, out_dir);
        }
        if (ana->parsed()) {
            return cmd_analyze(ana_dirs, ana_interval, out_dir);
        }
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const GatewayError& e) {
        std::cerr << "partial-run abort: " << e.what() << "\n";
        return kExitPartialAbort;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
