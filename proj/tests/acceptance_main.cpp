// Acceptance gate: runs every criterion at its stated tolerance and prints one
// pass/fail line per criterion. Exit status is nonzero if any gating criterion
// fails; the live smoke is opt-in and never gates.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arena/aliases.hpp"
#include "arena/analytics.hpp"
#include "arena/errors.hpp"
#include "arena/gateway.hpp"
#include "arena/guest_programs.hpp"
#include "arena/reinvent.hpp"
#include "arena/rl_math.hpp"
#include "arena/sandbox.hpp"
#include "arena/taskgen.hpp"
#include "arena/unlearn.hpp"
#include "arena/util.hpp"
#include "instance_gen.hpp"

using namespace arena;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct AcceptanceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define REQUIRE_THAT(cond, msg)                                             \
    do {                                                                    \
        if (!(cond)) {                                                      \
            std::ostringstream oss;                                         \
            oss << msg;                                                     \
            throw AcceptanceFailure(oss.str());                             \
        }                                                                   \
    } while (0)

std::string runtime_cmd() {
    return env_var("ARENA_GUEST_RUNTIME").value_or("python3");
}

Sandbox make_sandbox() {
    SandboxConfig cfg;
    cfg.runtime_cmd = runtime_cmd();
    return Sandbox(cfg);
}

fs::path work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("arena-acceptance-" + std::to_string(getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

TaskSpec tiny_dijkstra_spec(int variant = 0) {
    TaskSpec spec;
    spec.algo = AlgorithmId::Dijkstra;
    spec.variant = variant;
    spec.statement = "Task: dijkstra-v" + std::to_string(variant) +
                     "\n\nProblem Description: Single Source Shortest Path\n\n"
                     "Compute shortest path lengths from the source. Bound O(N^2).";
    spec.hint_l1 = "greedy hint";
    spec.hint_l2 = "greedy hint, expanded step by step";
    spec.scaffold = guest_scaffold(AlgorithmId::Dijkstra);
    spec.complexity_bound = "O(N^2)";
    spec.time_limit_s = 5.0;
    spec.mem_limit_bytes = 256ULL << 20;
    spec.cases.push_back({"case0", "5\n6\n1 2 10\n1 3 5\n2 4 1\n3 2 2\n3 5 9\n5 4 4\n1\n",
                          "0 7 5 8 14\n", false});
    spec.cases.push_back({"case1", "2\n1\n1 2 3\n1\n", "0 3\n", true});
    return spec;
}

ModelEndpoint write_mock(const json& rules, const std::string& tag) {
    const fs::path path = work_dir() / ("mock_" + tag + ".json");
    write_file(path, json{{"rules", rules}}.dump(2));
    ModelEndpoint ep;
    ep.base_url = "mock://" + path.string();
    ep.model_name = "mock";
    return ep;
}

json submit_rule(const std::string& match, const std::string& code,
                 std::optional<int> uses = std::nullopt) {
    json rule{{"match", match},
              {"turn",
               {{"text", "Submitting a candidate."},
                {"tool", {{"name", "submit_final_answer"}, {"arguments", {{"code", code}}}}}}}};
    if (uses) rule["uses"] = *uses;
    return rule;
}

const std::string kWrongCode = "def solve(n, m, graph, s):\n    print('42')\n";

// --- criterion bodies -------------------------------------------------------

void criterion_worked_examples() {
    auto sandbox = make_sandbox();
    auto dij = generate_bundle(AlgorithmId::Dijkstra, 1, 424242)[0];
    REQUIRE_THAT(dij.cases[0].stdin_data == "5\n6\n1 2 10\n1 3 5\n2 4 1\n3 2 2\n3 5 9\n5 4 4\n1\n",
                 "dijkstra case 0 is not the worked example");
    REQUIRE_THAT(dij.cases[0].expected_stdout == "0 7 5 8 14\n",
                 "dijkstra case 0 expected output mismatch");
    TaskSpec dij_only = dij;
    dij_only.cases = {dij.cases[0], dij.cases[0]};
    double t0 = monotonic_seconds();
    Verdict v = sandbox.run_submission(guest_program(AlgorithmId::Dijkstra).reference, dij_only);
    double dt = (monotonic_seconds() - t0) / 2;  // per case-0 grading run
    REQUIRE_THAT(v.accepted(), "dijkstra oracle solution not accepted: " << v.message);
    REQUIRE_THAT(dt < 1.0, "dijkstra case 0 took " << dt << "s (>= 1s)");

    auto str = generate_bundle(AlgorithmId::Strassen, 1, 424242)[0];
    REQUIRE_THAT(str.cases[0].stdin_data == "2\n1 2\n3 4\n5 6\n7 8\n",
                 "strassen case 0 is not the worked example");
    REQUIRE_THAT(str.cases[0].expected_stdout == "19 22\n43 50\n",
                 "strassen case 0 expected output mismatch");
    TaskSpec str_only = str;
    str_only.cases = {str.cases[0], str.cases[0]};
    t0 = monotonic_seconds();
    v = sandbox.run_submission(guest_program(AlgorithmId::Strassen).reference, str_only);
    dt = (monotonic_seconds() - t0) / 2;
    REQUIRE_THAT(v.accepted(), "strassen oracle solution not accepted: " << v.message);
    REQUIRE_THAT(dt < 1.0, "strassen case 0 took " << dt << "s (>= 1s)");
}

void criterion_oracle_equivalence() {
    const double t0 = monotonic_seconds();
    for (AlgorithmId algo : kAllAlgorithms) {
        Rng rng(Rng::derive(20260810, static_cast<uint64_t>(algo)));
        for (int i = 0; i < 1000; ++i) {
            const std::string input = testgen::instance_for(algo, rng);
            REQUIRE_THAT(solve_reference(algo, input) == solve_naive(algo, input),
                         "oracle mismatch for " << algorithm_name(algo) << " on instance " << i);
        }
    }
    const double dt = monotonic_seconds() - t0;
    REQUIRE_THAT(dt < 300.0, "oracle equivalence took " << dt << "s (>= 5 min)");
}

void criterion_calibration() {
    auto sandbox = make_sandbox();
    CalibrationSettings settings;
    settings.trials = 3;
    CalibrationReport combined;
    for (AlgorithmId algo : kAllAlgorithms) {
        auto specs = generate_bundle(algo, 2, 20260810);
        auto report = calibrate_bundle(specs, sandbox, settings);
        for (auto& row : report.rows) combined.rows.push_back(std::move(row));
    }
    write_file(work_dir() / "calibration_report.json", combined.to_json());
    write_file(work_dir() / "calibration_report.txt", combined.to_text());
    REQUIRE_THAT(combined.rows.size() == 20, "expected 20 calibrated specs");
    for (const auto& row : combined.rows) {
        REQUIRE_THAT(row.headroom >= 2.0,
                     row.spec_id << ": headroom " << row.headroom << " below 2x");
        REQUIRE_THAT(row.foil_outcome == "timeout",
                     row.spec_id << ": foil outcome " << row.foil_outcome);
        REQUIRE_THAT(row.sound, row.spec_id << ": calibration row unsound");
    }
}

void criterion_sandbox_enforcement() {
    auto sandbox = make_sandbox();
    for (double tau : {0.5, 1.0, 5.0}) {
        auto res = sandbox.run_snippet("while True:\n    pass\n", "", {tau, 256ULL << 20});
        REQUIRE_THAT(res.exit == ExitKind::TimedOut, "busy loop not timed out at tau=" << tau);
        REQUIRE_THAT(res.wall_time_s <= tau + 0.5,
                     "busy loop outlived tau+grace: " << res.wall_time_s << " at tau=" << tau);
    }

    TaskSpec spec = tiny_dijkstra_spec();
    spec.mem_limit_bytes = 64ULL << 20;
    const Verdict v = sandbox.run_submission(
        "def solve(n, m, graph, s):\n    x = bytearray(512 * 1024 * 1024)\n    print(len(x))\n",
        spec);
    REQUIRE_THAT(v.kind == VerdictKind::MemoryExceeded,
                 "allocation bomb verdict was " << v.message);
    REQUIRE_THAT(v.message == "Failed: Memory Limit Exceeded on Case 1.",
                 "memory verdict message mismatch: " << v.message);

    // 100 consecutive runs, including killed ones, leave no orphans.
    for (int i = 0; i < 100; ++i) {
        ExecResult res;
        if (i % 5 == 4) {
            res = sandbox.run_snippet(
                "import subprocess, sys, time\n"
                "subprocess.Popen([sys.executable, '-c', 'import time; time.sleep(20)'])\n"
                "time.sleep(20)\n",
                "", {0.2, 256ULL << 20});
            REQUIRE_THAT(res.exit == ExitKind::TimedOut, "spawner run " << i << " not killed");
        } else {
            res = sandbox.run_snippet("print(" + std::to_string(i) + ")", "",
                                      {5.0, 256ULL << 20});
            REQUIRE_THAT(res.exit == ExitKind::Completed, "run " << i << " failed");
        }
        REQUIRE_THAT(count_pgid_members(res.pgid) == 0, "orphans after run " << i);
    }
}

void criterion_verdict_format() {
    auto sandbox = make_sandbox();
    const TaskSpec spec = tiny_dijkstra_spec();

    const Verdict ok = sandbox.run_submission(guest_program(spec.algo).reference, spec);
    REQUIRE_THAT(ok.accepted(), "reference not accepted");
    REQUIRE_THAT(ok.message.rfind("Accepted! Passed all 2 cases. Max Time: ", 0) == 0 &&
                     ok.message.size() >= 43 && ok.message.substr(ok.message.size() - 2) == "s.",
                 "accepted message shape: " << ok.message);

    const Verdict wa =
        sandbox.run_submission("def solve(n, m, graph, s):\n    print('x')\n", spec);
    REQUIRE_THAT(wa.message == "Failed: Wrong Answer on Case 1.",
                 "wrong-answer message: " << wa.message);

    const Verdict to = sandbox.run_submission(
        "def solve(n, m, graph, s):\n    x = 0\n    while True:\n        x += 1\n", spec);
    REQUIRE_THAT(to.message == "Failed: Timeout after 5.0 seconds on Case 1.",
                 "timeout message: " << to.message);

    const Verdict re =
        sandbox.run_submission("def solve(n, m, graph, s):\n    raise ValueError('boom')\n", spec);
    REQUIRE_THAT(re.message.rfind("Failed: Runtime Error on Case 1: ", 0) == 0 &&
                     re.message.back() == '.',
                 "runtime-error message: " << re.message);

    TaskSpec mem_spec = spec;
    mem_spec.mem_limit_bytes = 64ULL << 20;
    const Verdict me = sandbox.run_submission(
        "def solve(n, m, graph, s):\n    x = bytearray(512 * 1024 * 1024)\n", mem_spec);
    REQUIRE_THAT(me.message == "Failed: Memory Limit Exceeded on Case 1.",
                 "memory message: " << me.message);

    for (const auto& v : {ok, wa, to, re, me}) {
        auto parsed = parse_verdict(v.message);
        REQUIRE_THAT(parsed.has_value() && parsed->message == v.message && parsed->kind == v.kind,
                     "round-trip failure for: " << v.message);
    }
}

void criterion_loop_determinism() {
    const double t0 = monotonic_seconds();
    auto sandbox = make_sandbox();
    const TaskSpec spec = tiny_dijkstra_spec();
    Gateway gw;

    // Scripted 13-round success.
    auto ep13 = write_mock(json::array({
                               submit_rule(".*", kWrongCode, 12),
                               submit_rule(".*", guest_program(spec.algo).reference),
                           }),
                           "c6_round13");
    TrialOptions opt;
    opt.seed = 13;
    auto t13 = run_trial(gw, sandbox, spec, HintLevel::None, ep13, VerifierMode::none(), opt);
    REQUIRE_THAT(t13.outcome == Outcome::Success && t13.success_round == 13 &&
                     t13.rounds.size() == 13,
                 "13-round stub: outcome round " << t13.success_round);

    // Always-fail stub: exactly 30 rounds.
    auto ep_fail = write_mock(json::array({submit_rule(".*", kWrongCode)}), "c6_fail");
    opt.seed = 30;
    opt.max_rounds = 30;
    auto tf = run_trial(gw, sandbox, spec, HintLevel::None, ep_fail, VerifierMode::none(), opt);
    REQUIRE_THAT(tf.outcome == Outcome::Failure && tf.rounds.size() == 30,
                 "always-fail stub: " << tf.rounds.size() << " rounds");

    // 128-trial cohort, 64 scripted successes (variants 0-3 succeed).
    std::vector<TaskSpec> variants;
    for (int v = 0; v < 8; ++v) variants.push_back(tiny_dijkstra_spec(v));
    auto ep_cohort = write_mock(
        json::array({
            submit_rule("dijkstra-v[0-3]\\b", guest_program(spec.algo).reference),
            submit_rule(".*", kWrongCode),
        }),
        "c6_cohort");
    CohortOptions copt;
    copt.trials = 128;
    copt.max_rounds = 2;
    copt.seed = 128;
    copt.workers = 8;
    copt.output_dir = work_dir() / "c6_cohort";
    fs::remove_all(copt.output_dir);
    auto cohort = run_cohort(gw, sandbox, variants, HintLevel::None, ep_cohort,
                             VerifierMode::none(), copt);
    REQUIRE_THAT(cohort.aborted_trials == 0, "cohort aborted trials");
    REQUIRE_THAT(cohort.trajectories.size() == 128, "cohort size " << cohort.trajectories.size());
    auto stat = compute_rsr(cohort.trajectories);
    REQUIRE_THAT(std::abs(stat.success_rate - 50.0) < 1e-9, "cohort RSR " << stat.success_rate);

    std::set<uint64_t> seeds;
    for (const auto& t : cohort.trajectories) seeds.insert(t.seed);
    REQUIRE_THAT(seeds.size() == 128, "cohort seeds not pairwise distinct");

    size_t files = 0;
    for (const auto& entry : fs::directory_iterator(copt.output_dir / "trials")) {
        read_trajectory(entry.path());  // throws if unparseable
        ++files;
    }
    REQUIRE_THAT(files == 128, "expected 128 trajectory files, saw " << files);

    const double dt = monotonic_seconds() - t0;
    REQUIRE_THAT(dt < 120.0, "mock suite took " << dt << "s (>= 2 min)");
}

void criterion_verifier_plumbing() {
    auto sandbox = make_sandbox();
    const TaskSpec spec = tiny_dijkstra_spec();

    // The D.5 wording must be present in the outbound verifier prompt.
    const auto vmsgs = render_verifier_messages(spec, make_wrong_answer(1), kWrongCode);
    REQUIRE_THAT(vmsgs.size() == 1 &&
                     vmsgs[0].content.find("must not output or mention the correct solution") !=
                         std::string::npos,
                 "verifier prompt lacks the non-leakage instruction");

    // VerifierMode::None: no diagnostic prose in any round context.
    {
        Gateway gw;
        auto ep = write_mock(json::array({
                                 submit_rule(".*", kWrongCode, 3),
                                 submit_rule(".*", guest_program(spec.algo).reference),
                             }),
                             "c7_none");
        TrialOptions opt;
        opt.seed = 70;
        opt.output_dir = work_dir() / "c7_none";
        fs::remove_all(opt.output_dir);
        auto traj = run_trial(gw, sandbox, spec, HintLevel::None, ep, VerifierMode::none(), opt);
        REQUIRE_THAT(traj.outcome == Outcome::Success, "none-mode trial failed");
        for (const auto& r : traj.rounds) {
            REQUIRE_THAT(!r.verifier_feedback.has_value(), "feedback under VerifierMode::None");
        }
        std::string sha;
        for (const auto& line :
             split_lines(read_file(opt.output_dir / "trials" / (traj.trial_id + ".jsonl")))) {
            json j = json::parse(line);
            if (j["type"] == "outcome") sha = j["transcript_sha"].get<std::string>();
        }
        const json transcript =
            json::parse(read_file(opt.output_dir / "transcripts" / (sha + ".json")));
        for (size_t i = 3; i < transcript.size(); ++i) {
            if (transcript[i]["role"] != "user") continue;
            const std::string content = transcript[i]["content"].get<std::string>();
            REQUIRE_THAT(parse_verdict(content).has_value(),
                         "non-verdict prose in none-mode context: " << content.substr(0, 60));
        }
    }

    // SelfModel / OracleModel: exactly one feedback message per failed round;
    // the feedback rule only fires on the D.5 instruction string.
    for (const bool use_oracle : {false, true}) {
        Gateway gw;
        const json feedback_rule{
            {"match", "must not output or mention the correct solution"},
            {"turn", {{"text", "Diagnosis: the submission prints a constant."}}}};
        json rules = json::array();
        if (!use_oracle) rules.push_back(feedback_rule);
        rules.push_back(submit_rule(".*", kWrongCode, 2));
        rules.push_back(submit_rule(".*", guest_program(spec.algo).reference));
        auto candidate = write_mock(rules, use_oracle ? "c7_oracle_cand" : "c7_self");
        VerifierMode vmode = VerifierMode::self();
        if (use_oracle) {
            auto oracle = write_mock(json::array({feedback_rule}), "c7_oracle_verifier");
            vmode = VerifierMode::oracle_model(oracle);
        }
        TrialOptions opt;
        opt.seed = use_oracle ? 72 : 71;
        auto traj = run_trial(gw, sandbox, spec, HintLevel::None, candidate, vmode, opt);
        REQUIRE_THAT(traj.outcome == Outcome::Success, "verifier-mode trial failed");
        REQUIRE_THAT(traj.rounds.size() == 3, "expected 3 rounds");
        for (size_t r = 0; r < traj.rounds.size(); ++r) {
            const bool failed_round = r < 2;
            REQUIRE_THAT(traj.rounds[r].verifier_feedback.has_value() == failed_round,
                         "feedback presence wrong at round " << r + 1);
            if (failed_round) {
                REQUIRE_THAT(*traj.rounds[r].verifier_feedback ==
                                 "Diagnosis: the submission prints a constant.",
                             "feedback content mismatch");
            }
        }
    }
}

void criterion_rl_math() {
    // Judge-reward truth table, 8/8.
    int paying = 0;
    for (int k = 0; k <= 1; ++k) {
        for (int c = 0; c <= 1; ++c) {
            for (int u = 0; u <= 1; ++u) {
                const int r = reward({k, c, u});
                const int expected = (k == 0 && c == 0 && u == 1) ? 1 : 0;
                REQUIRE_THAT(r == expected, "reward(" << k << c << u << ") = " << r);
                paying += r;
            }
        }
    }
    REQUIRE_THAT(paying == 1, "truth table pays " << paying << " times");

    // group_advantages properties on 10,000 random reward vectors.
    Rng rng(2026);
    for (int it = 0; it < 10000; ++it) {
        const size_t g = 2 + rng.below(14);
        std::vector<double> rewards;
        for (size_t i = 0; i < g; ++i) {
            rewards.push_back(static_cast<double>(rng.range(-50, 50)) / 3.0);
        }
        double mean = 0;
        for (double r : rewards) mean += r;
        mean /= static_cast<double>(g);
        double var = 0;
        for (double r : rewards) var += (r - mean) * (r - mean);
        var /= static_cast<double>(g);
        if (std::sqrt(var) <= 1e-6) continue;
        auto adv = group_advantages(rewards);
        double sum = 0;
        for (double a : adv) sum += a;
        REQUIRE_THAT(std::abs(sum) < 1e-9, "advantages not zero-sum at iteration " << it);
        std::vector<double> shifted = rewards, scaled = rewards;
        for (double& r : shifted) r += 11.5;
        for (double& r : scaled) r *= 2.75;
        auto adv_shift = group_advantages(shifted);
        auto adv_scale = group_advantages(scaled);
        for (size_t i = 0; i < g; ++i) {
            REQUIRE_THAT(std::abs(adv_shift[i] - adv[i]) < 1e-9, "shift invariance broken");
            REQUIRE_THAT(std::abs(adv_scale[i] - adv[i]) < 1e-9, "scale invariance broken");
        }
    }

    // clipped_surrogate fixtures at 1e-12.
    REQUIRE_THAT(std::abs(clipped_surrogate(1.0, 2.0, 0.2) - 2.0) < 1e-12, "fixture 1");
    REQUIRE_THAT(std::abs(clipped_surrogate(1.5, 1.0, 0.2) - 1.2) < 1e-12, "fixture 2");
    REQUIRE_THAT(std::abs(clipped_surrogate(0.5, -1.0, 0.2) + 0.8) < 1e-12, "fixture 3");

    // kl_penalty: nonnegativity on 10,000 random pairs plus the ln2 fixture.
    for (int it = 0; it < 10000; ++it) {
        const size_t n = 1 + rng.below(16);
        std::vector<double> lt, lr;
        for (size_t i = 0; i < n; ++i) {
            lt.push_back(-rng.real01() * 6.0);
            lr.push_back(-rng.real01() * 6.0);
        }
        REQUIRE_THAT(kl_penalty(lt, lr) >= 0.0, "kl negative at iteration " << it);
    }
    const double ln2 = std::log(2.0);
    REQUIRE_THAT(std::abs(kl_penalty({-1.0 - ln2}, {-1.0}) - (2.0 - ln2 - 1.0)) < 1e-9,
                 "ln2 fixture");

    // calibrated_advantages on the all-zero group: strictly negative.
    for (double a : calibrated_advantages({0, 0, 0, 0})) {
        REQUIRE_THAT(a < 0.0, "calibrated advantage not strictly negative");
    }

    REQUIRE_THAT(std::abs(ttrl_reward(make_accepted(2, 1.35)) - 1.0 / 1.35) < 1e-12,
                 "ttrl 1/1.35 fixture");
}

void criterion_fr_and_judge() {
    // Exhaustive 5-label patterns, majority with ties to 0.
    for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> labels;
        int ones = 0;
        for (int b = 0; b < 5; ++b) {
            labels.push_back((mask >> b) & 1);
            ones += (mask >> b) & 1;
        }
        REQUIRE_THAT(aggregate_labels(labels) == (ones >= 3 ? 1 : 0),
                     "aggregation wrong for mask " << mask);
    }
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> labels;
        int ones = 0;
        for (int b = 0; b < 4; ++b) {
            labels.push_back((mask >> b) & 1);
            ones += (mask >> b) & 1;
        }
        REQUIRE_THAT(aggregate_labels(labels) == (ones > 2 ? 1 : 0),
                     "even-count tie not conservative for mask " << mask);
    }

    // Judge JSON shapes parse.
    const auto shape = extract_json_block(
        "```json\n{\"know_or_not\": false, \"misspelling_or_not\": false, "
        "\"readable_or_not\": true}\n```");
    REQUIRE_THAT(shape["know_or_not"] == false && shape["readable_or_not"] == true,
                 "judge JSON shape parse failure");

    Gateway gw;
    auto good = write_mock(
        json::array(
            {{{"match", ".*"},
              {"turn",
               {{"text",
                 R"({"know_or_not": true, "misspelling_or_not": false, "readable_or_not": true})"}}}}}),
        "c9_good");
    auto v = judge_response(gw, "q", "r", AlgorithmId::Dijkstra, good);
    REQUIRE_THAT(v.k == 1 && v.c == 0 && v.u == 1, "judge field mapping");

    auto bad = write_mock(json::array({{{"match", ".*"}, {"turn", {{"text", "prose only"}}}}}),
                          "c9_bad");
    bool threw = false;
    Gateway gw2;
    try {
        judge_response(gw2, "q", "r", AlgorithmId::Dijkstra, bad);
    } catch (const JudgeParseError&) {
        threw = true;
    }
    REQUIRE_THAT(threw, "malformed judge output did not raise");
    REQUIRE_THAT(gw2.call_log().size() == 2, "expected exactly one retry, saw "
                                                 << gw2.call_log().size() << " attempts");
}

void criterion_coldstart() {
    Gateway gw;
    auto base = write_mock(
        json::array({
            {{"match", "EMPTYME"},
             {"turn", {{"text", "Dijkstra.\nOnly Dijkstra here.\nDijkstra forever."}}}},
            {{"match", ".*"},
             {"turn",
              {{"text", "Let me answer.\nEcho: {{last_user}}\nThe Dijkstra method is what I'd "
                        "name.\nBeyond that I cannot say."}}}},
        }),
        "c10_base");

    std::vector<std::string> templates;
    int planted_empty = 0;
    for (int i = 0; i < 500; ++i) {
        if (i % 10 == 3) {
            templates.push_back("EMPTYME question " + std::to_string(i) +
                                " about the Dijkstra algorithm?");
            ++planted_empty;
        } else {
            templates.push_back("Question " + std::to_string(i) +
                                ": what is the Dijkstra algorithm used for?");
        }
    }

    auto run = [&] { return synthesize_coldstart(gw, templates, AlgorithmId::Dijkstra, base, 77); };
    auto a = run();
    auto b = run();

    REQUIRE_THAT(a.empty_survivors == planted_empty,
                 "empty-survivor count " << a.empty_survivors << " != " << planted_empty);
    REQUIRE_THAT(a.pairs.size() == templates.size() - static_cast<size_t>(planted_empty),
                 "pair count " << a.pairs.size());

    // Byte-reproducible under a fixed seed.
    REQUIRE_THAT(a.pairs.size() == b.pairs.size(), "pair count differs across runs");
    for (size_t i = 0; i < a.pairs.size(); ++i) {
        REQUIRE_THAT(a.pairs[i].query == b.pairs[i].query &&
                         a.pairs[i].response == b.pairs[i].response,
                     "pair " << i << " not byte-reproducible");
    }

    // Zero unfiltered leaks: removing the back-substituted canonical name must
    // leave no target mention (any alias would survive the removal).
    const std::string canonical = alias_entry(AlgorithmId::Dijkstra).canonical;
    for (const auto& pair : a.pairs) {
        std::string stripped = pair.response;
        size_t at = 0;
        while ((at = stripped.find(canonical, at)) != std::string::npos) {
            stripped.erase(at, canonical.size());
        }
        REQUIRE_THAT(!mentions_target(stripped, AlgorithmId::Dijkstra),
                     "unfiltered leak in response: " << pair.response.substr(0, 80));
        REQUIRE_THAT(pair.response.find("method is what") == std::string::npos,
                     "leak line survived the filter");
    }
}

void criterion_collapse_analytics() {
    auto mk = [](const std::string& id, int rounds, Outcome outcome, int success_round,
                 double tokens, double decay) {
        Trajectory t;
        t.trial_id = id;
        t.algo = AlgorithmId::Gray;
        t.hint = HintLevel::None;
        t.max_rounds = rounds;
        for (int r = 0; r < rounds; ++r) {
            Round round;
            round.turn.output_tokens = static_cast<uint64_t>(tokens);
            t.rounds.push_back(std::move(round));
            tokens *= decay;
        }
        t.outcome = outcome;
        t.success_round = success_round;
        return t;
    };

    std::vector<Trajectory> monotone = {mk("a", 12, Outcome::Failure, 0, 4096, 0.5),
                                        mk("b", 12, Outcome::Failure, 0, 4096, 0.5)};
    auto profile = collapse_profile(monotone, 3);
    for (size_t i = 1; i < profile.buckets.size(); ++i) {
        REQUIRE_THAT(profile.buckets[i].mean_output_tokens <
                         profile.buckets[i - 1].mean_output_tokens,
                     "bucket means not strictly decreasing at bucket " << i);
    }

    std::vector<Trajectory> successes = {mk("c", 10, Outcome::Success, 10, 100, 1.0),
                                         mk("d", 20, Outcome::Success, 20, 100, 1.0)};
    auto sp = collapse_profile(successes, 3);
    REQUIRE_THAT(sp.mean_success_round.has_value() &&
                     std::abs(*sp.mean_success_round - 15.0) < 1e-12,
                 "mean_success_round fixture");
}

bool criterion_live_smoke(std::string& note) {
    if (env_var("ARENA_LIVE_SMOKE").value_or("") != "1") {
        note = "skipped (set ARENA_LIVE_SMOKE=1 and provide a live config)";
        return true;  // non-gating
    }
    const auto cfg_path = env_var("ARENA_LIVE_CONFIG");
    if (!cfg_path) {
        note = "skipped (ARENA_LIVE_CONFIG not set)";
        return true;
    }
    try {
        RunConfig cfg = load_config(*cfg_path);
        SandboxConfig sc;
        sc.runtime_cmd = cfg.sandbox.runtime;
        Sandbox sandbox(sc);
        Gateway gw;
        const TaskSpec spec = tiny_dijkstra_spec();
        TrialOptions opt;
        opt.seed = 1;
        opt.max_rounds = 8;
        opt.output_dir = work_dir() / "live_smoke";
        auto traj = run_trial(gw, sandbox, spec, HintLevel::L2,
                              cfg.endpoint_for(ModelRole::Candidate), VerifierMode::self(), opt);
        auto loaded = read_trajectory(opt.output_dir / "trials" / (traj.trial_id + ".jsonl"));
        auto stat = compute_rsr({loaded});
        note = "completed: outcome=" +
               std::string(loaded.outcome == Outcome::Success ? "success" : "failure") +
               " rounds=" + std::to_string(loaded.rounds.size()) +
               " rsr=" + std::to_string(stat.success_rate);
        return true;
    } catch (const std::exception& e) {
        note = std::string("live smoke error (non-gating): ") + e.what();
        return true;
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {"1. worked-example fidelity", criterion_worked_examples},
        {"2. oracle equivalence (10 x 1000 instances)", criterion_oracle_equivalence},
        {"3. calibration soundness (arena calibrate)", criterion_calibration},
        {"4. sandbox enforcement", criterion_sandbox_enforcement},
        {"5. verdict format", criterion_verdict_format},
        {"6. loop determinism with mocks", criterion_loop_determinism},
        {"7. verifier ablation plumbing", criterion_verifier_plumbing},
        {"8. reward and RL math", criterion_rl_math},
        {"9. FR arithmetic and judge parsing", criterion_fr_and_judge},
        {"10. cold-start synthesis", criterion_coldstart},
        {"11. thought-collapse analytics", criterion_collapse_analytics},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const double t0 = monotonic_seconds();
        try {
            c.body();
            std::printf("[PASS] %-45s (%.1fs)\n", c.name, monotonic_seconds() - t0);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] %-45s %s\n", c.name, e.what());
        }
        std::fflush(stdout);
    }

    std::string note;
    criterion_live_smoke(note);
    std::printf("[%s] %-45s %s\n", "SKIP", "12. live smoke (optional, non-gating)", note.c_str());

    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all gating criteria passed\n");
    return 0;
}
