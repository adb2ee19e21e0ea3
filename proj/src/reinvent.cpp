#include "arena/reinvent.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "arena/aliases.hpp"
#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

using nlohmann::json;

HintLevel hint_level_from_int(int level) {
    switch (level) {
        case 0: return HintLevel::None;
        case 1: return HintLevel::L1;
        case 2: return HintLevel::L2;
        default: throw ConfigError("hint level must be 0, 1, or 2");
    }
}

std::string_view verifier_mode_name(VerifierMode::Kind k) {
    switch (k) {
        case VerifierMode::Kind::None: return "none";
        case VerifierMode::Kind::SelfModel: return "self";
        case VerifierMode::Kind::OracleModel: return "oracle";
    }
    return "unknown";
}

std::string_view action_kind_name(ActionKind a) {
    switch (a) {
        case ActionKind::NoAction: return "no_action";
        case ActionKind::RanSnippet: return "ran_snippet";
        case ActionKind::Submitted: return "submitted";
    }
    return "unknown";
}

std::vector<Message> render_task_messages(const TaskSpec& spec, HintLevel hint) {
    std::vector<Message> messages;
    messages.push_back({"system", "You are a helpful assistant."});
    messages.push_back({"user", spec.statement});
    messages.push_back(
        {"user",
         "Submission Format:\n\nHere's the submission running context:\n\n" + spec.scaffold +
             "\n\nThe package import and stdin processing code is provided, all you need to do "
             "is to submit a pure solve function."});
    if (hint == HintLevel::L1) {
        messages.push_back({"user", "Hint.\n" + spec.hint_l1});
    } else if (hint == HintLevel::L2) {
        messages.push_back({"user", "Hint.\n" + spec.hint_l2});
    }
    return messages;
}

std::vector<Message> render_verifier_messages(const TaskSpec& spec, const Verdict& verdict,
                                              const std::string& submitted_code) {
    if (verdict.accepted()) {
        throw std::invalid_argument("verifier messages require a failure verdict");
    }
    std::string prompt;
    prompt += "<problem>\n" + spec.statement + "\n</problem>\n\n";
    prompt +=
        "Given the problem background, please check why the following submission fail to pass.\n"
        "Pay attention that you must not output or mention the correct solution, you should "
        "only explain why the submission fail:\n";
    prompt += "<submission_status>\n" + verdict.message + "\n" + submitted_code +
              "\n</submission_status>";
    return {{"user", prompt}};
}

std::vector<ToolSchema> candidate_tools() {
    return {
        {"run_code",
         "Run a Python snippet in the sandboxed interpreter and observe stdout/stderr.",
         R"({"type":"object","properties":{"code":{"type":"string"}},"required":["code"]})"},
        {"submit_final_answer",
         "Submit the final solve function for grading against the hidden test suite.",
         R"({"type":"object","properties":{"code":{"type":"string"}},"required":["code"]})"},
    };
}

namespace {

std::string tool_code_argument(const ToolCall& call) {
    json args = json::parse(call.arguments_json, nullptr, false);
    if (args.is_discarded() || !args.contains("code")) return {};
    return args["code"].is_string() ? args["code"].get<std::string>() : args["code"].dump();
}

std::string clip_text(const std::string& text, uint64_t limit) {
    if (text.size() <= limit) return text;
    return text.substr(0, limit) + "\n...[truncated]";
}

std::string exec_result_message(const ExecResult& res, uint64_t limit) {
    std::string out = "run_code result:\n";
    switch (res.exit) {
        case ExitKind::Completed: out += "exit: completed\n"; break;
        case ExitKind::TimedOut: out += "exit: timed out\n"; break;
        case ExitKind::MemoryKilled: out += "exit: memory limit\n"; break;
        case ExitKind::Crashed:
            out += "exit: crashed (code " + std::to_string(res.exit_code) + ")\n";
            break;
    }
    out += "stdout:\n" + clip_text(res.stdout_data, limit) + "\n";
    if (!res.stderr_data.empty()) out += "stderr:\n" + clip_text(res.stderr_data, limit) + "\n";
    return out;
}

// Oldest exploratory messages collapse into a fixed notice when the context
// budget is exceeded; the task preamble and the freshest turns survive.
bool elide_rounds(std::vector<Message>& messages, size_t task_message_count) {
    static const std::string kNotice = "[earlier rounds elided]";
    const size_t keep_tail = 4;
    if (messages.size() <= task_message_count + keep_tail + 1) return false;
    const bool already = messages[task_message_count].content == kNotice;
    const size_t erase_begin = task_message_count + (already ? 1 : 0);
    const size_t erase_end = messages.size() - keep_tail;
    if (erase_begin >= erase_end) return false;
    messages.erase(messages.begin() + static_cast<long>(erase_begin),
                   messages.begin() + static_cast<long>(erase_end));
    if (!already) {
        messages.insert(messages.begin() + static_cast<long>(task_message_count),
                        {"user", kNotice});
    }
    return true;
}

std::string derive_trial_id(const TaskSpec& spec, uint64_t seed) {
    return spec.id() + "-s" + std::to_string(seed);
}

}  // namespace

Trajectory run_trial(Gateway& gw, const Sandbox& sandbox, const TaskSpec& spec, HintLevel hint,
                     const ModelEndpoint& candidate, const VerifierMode& vmode,
                     const TrialOptions& options) {
    if (options.max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
    if (vmode.kind == VerifierMode::Kind::OracleModel && !vmode.oracle) {
        throw ConfigError("oracle verifier mode requires an endpoint");
    }

    Trajectory traj;
    traj.trial_id = options.trial_id.empty() ? derive_trial_id(spec, options.seed)
                                             : options.trial_id;
    traj.algo = spec.algo;
    traj.variant = spec.variant;
    traj.hint = hint;
    traj.verifier = vmode.kind;
    traj.seed = options.seed;
    traj.max_rounds = options.max_rounds;
    traj.complete = false;

    std::vector<Message> messages = render_task_messages(spec, hint);
    const size_t task_message_count = messages.size();
    const auto tools = candidate_tools();
    int start_round = 1;

    if (options.resume && !options.output_dir.empty()) {
        const auto file = options.output_dir / "trials" / (traj.trial_id + ".jsonl");
        if (std::filesystem::exists(file)) {
            Trajectory prior = read_trajectory(file);
            if (prior.complete && !prior.aborted) return prior;  // nothing to redo
            auto transcript = read_transcript(options.output_dir, traj.trial_id);
            if (!transcript.empty()) messages = std::move(transcript);
            traj.rounds = std::move(prior.rounds);
            start_round = static_cast<int>(traj.rounds.size()) + 1;
        }
    }

    auto persist = [&](const std::vector<Message>& transcript) {
        if (!options.output_dir.empty()) write_trajectory(options.output_dir, traj, transcript);
    };

    for (int round_no = start_round; round_no <= options.max_rounds; ++round_no) {
        Round round;
        round.ts_start = monotonic_seconds();
        AssistantTurn turn;
        try {
            for (;;) {
                try {
                    turn = gw.chat(candidate, messages, tools,
                                   Rng::derive(options.seed, static_cast<uint64_t>(round_no)));
                    break;
                } catch (const ContextOverflow&) {
                    if (!elide_rounds(messages, task_message_count)) throw;
                }
            }
        } catch (const ArenaError& e) {
            traj.aborted = true;
            persist(messages);
            throw GatewayError("trial " + traj.trial_id + " aborted at round " +
                               std::to_string(round_no) + ": " + e.what());
        }
        round.turn = turn;

        std::string assistant_record = turn.text;
        for (const auto& call : turn.tool_calls) {
            assistant_record += "\n[tool call: " + call.name + "]";
        }
        messages.push_back({"assistant", assistant_record});

        bool accepted = false;
        if (!turn.tool_calls.empty()) {
            const ToolCall& call = turn.tool_calls.front();
            const std::string code = tool_code_argument(call);
            if (call.name == "run_code") {
                round.action = ActionKind::RanSnippet;
                round.exec = sandbox.run_snippet(
                    code, "", {spec.time_limit_s, spec.mem_limit_bytes});
                messages.push_back(
                    {"user", exec_result_message(*round.exec, options.snippet_output_limit)});
            } else if (call.name == "submit_final_answer") {
                round.action = ActionKind::Submitted;
                const Verdict verdict = sandbox.run_submission(code, spec);
                round.verdict = verdict;
                messages.push_back({"user", verdict.message});
                if (verdict.accepted()) {
                    accepted = true;
                } else if (vmode.kind != VerifierMode::Kind::None) {
                    const ModelEndpoint& verifier_ep =
                        vmode.kind == VerifierMode::Kind::SelfModel ? candidate : *vmode.oracle;
                    try {
                        const AssistantTurn feedback_turn =
                            gw.chat(verifier_ep, render_verifier_messages(spec, verdict, code));
                        round.verifier_feedback = feedback_turn.text;
                        round.leak_flagged = mentions_target(feedback_turn.text, spec.algo);
                        messages.push_back({"user", feedback_turn.text});
                    } catch (const ArenaError& e) {
                        traj.aborted = true;
                        traj.rounds.push_back(round);
                        persist(messages);
                        throw GatewayError("trial " + traj.trial_id +
                                           " aborted in verifier call: " + e.what());
                    }
                }
            }
        }
        round.ts_end = monotonic_seconds();
        traj.rounds.push_back(std::move(round));
        persist(messages);
        if (accepted) {
            traj.outcome = Outcome::Success;
            traj.success_round = round_no;
            traj.complete = true;
            persist(messages);
            return traj;
        }
    }
    traj.outcome = Outcome::Failure;
    traj.complete = true;
    persist(messages);
    return traj;
}

RsrStat compute_rsr(const std::vector<Trajectory>& trajectories) {
    if (trajectories.empty()) throw EmptyInput("compute_rsr: empty cohort");
    const AlgorithmId algo = trajectories.front().algo;
    const HintLevel hint = trajectories.front().hint;
    size_t successes = 0;
    double round_sum = 0;
    for (const auto& t : trajectories) {
        if (t.algo != algo || t.hint != hint) {
            throw MixedCohort("compute_rsr: cohort mixes algorithms or hint levels");
        }
        if (t.outcome == Outcome::Success) {
            ++successes;
            round_sum += t.success_round;
        }
    }
    RsrStat stat;
    stat.n = trajectories.size();
    stat.success_rate = 100.0 * static_cast<double>(successes) /
                        static_cast<double>(trajectories.size());
    if (successes > 0) {
        stat.mean_success_round = round_sum / static_cast<double>(successes);
    }
    return stat;
}

CohortResult run_cohort(Gateway& gw, const Sandbox& sandbox, const std::vector<TaskSpec>& variants,
                        HintLevel hint, const ModelEndpoint& candidate, const VerifierMode& vmode,
                        const CohortOptions& options) {
    if (variants.empty()) throw EmptyInput("run_cohort: no variants");
    if (options.trials % static_cast<int>(variants.size()) != 0) {
        throw ConfigError("run_cohort: trials must split evenly across variants");
    }
    const int per_variant = options.trials / static_cast<int>(variants.size());

    struct Job {
        const TaskSpec* spec;
        uint64_t seed;
        std::string trial_id;
    };
    std::vector<Job> jobs;
    for (size_t v = 0; v < variants.size(); ++v) {
        for (int i = 0; i < per_variant; ++i) {
            // Pairwise-distinct seeds derived from (run seed, variant, index).
            const uint64_t seed = Rng::derive(options.seed, v, static_cast<uint64_t>(i), 0x7121);
            jobs.push_back({&variants[v], seed,
                            variants[v].id() + "-t" + std::to_string(i)});
        }
    }

    CohortResult result;
    result.trajectories.resize(jobs.size());
    std::vector<char> completed(jobs.size(), 0);
    std::atomic<size_t> next{0};
    std::atomic<int> aborted{0};
    const int width = std::max(1, options.workers);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(width));
    for (int w = 0; w < width; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                TrialOptions topt;
                topt.max_rounds = options.max_rounds;
                topt.seed = jobs[i].seed;
                topt.trial_id = jobs[i].trial_id;
                topt.output_dir = options.output_dir;
                for (int attempt = 0; attempt <= options.resume_retries; ++attempt) {
                    topt.resume = attempt > 0;  // pick up the persisted partial
                    try {
                        result.trajectories[i] = run_trial(gw, sandbox, *jobs[i].spec, hint,
                                                           candidate, vmode, topt);
                        completed[i] = 1;
                        break;
                    } catch (const GatewayError&) {
                        if (attempt == options.resume_retries) aborted.fetch_add(1);
                    }
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    result.aborted_trials = aborted.load();
    if (result.aborted_trials > 0) {
        std::vector<Trajectory> kept;
        for (size_t i = 0; i < jobs.size(); ++i) {
            if (completed[i]) kept.push_back(std::move(result.trajectories[i]));
        }
        result.trajectories = std::move(kept);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Trajectory log IO
// ---------------------------------------------------------------------------

void write_trajectory(const std::filesystem::path& dir, const Trajectory& t,
                      const std::vector<Message>& transcript) {
    json transcript_json = json::array();
    for (const auto& m : transcript) {
        transcript_json.push_back({{"role", m.role}, {"content", m.content}});
    }
    const std::string transcript_text = transcript_json.dump(1);
    const std::string sha = sha256_hex(transcript_text);
    write_file(dir / "transcripts" / (sha + ".json"), transcript_text);

    std::string out;
    json header{{"type", "header"},
                {"schema_version", 1},
                {"trial_id", t.trial_id},
                {"algo", std::string(algorithm_name(t.algo))},
                {"variant", t.variant},
                {"hint", static_cast<int>(t.hint)},
                {"verifier", std::string(verifier_mode_name(t.verifier))},
                {"seed", t.seed},
                {"max_rounds", t.max_rounds}};
    out += header.dump() + "\n";
    int round_no = 0;
    for (const auto& r : t.rounds) {
        ++round_no;
        json jr{{"type", "round"},
                {"trial_id", t.trial_id},
                {"round_no", round_no},
                {"output_tokens", r.turn.output_tokens},
                {"action_kind", std::string(action_kind_name(r.action))},
                {"feedback_present", r.verifier_feedback.has_value()},
                {"leak_flagged", r.leak_flagged},
                {"tool_calls", r.turn.tool_calls.size()},
                {"ts_start", r.ts_start},
                {"ts_end", r.ts_end}};
        if (r.verdict) {
            jr["verdict_kind"] = std::string(verdict_kind_name(r.verdict->kind));
            jr["verdict_message"] = r.verdict->message;
        }
        out += jr.dump() + "\n";
    }
    json outcome{{"type", "outcome"},
                 {"outcome", t.outcome == Outcome::Success ? "success" : "failure"},
                 {"aborted", t.aborted},
                 {"complete", t.complete},
                 {"transcript_sha", sha}};
    if (t.outcome == Outcome::Success) outcome["success_round"] = t.success_round;
    out += outcome.dump() + "\n";
    write_file(dir / "trials" / (t.trial_id + ".jsonl"), out);
}

Trajectory read_trajectory(const std::filesystem::path& file) {
    Trajectory t;
    bool saw_header = false;
    bool saw_outcome = false;
    for (const auto& line : split_lines(read_file(file))) {
        if (rstrip(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw CorruptLog("bad trajectory line in " + file.string());
        const std::string type = j.value("type", "");
        if (type == "header") {
            saw_header = true;
            t.trial_id = j.at("trial_id").get<std::string>();
            t.algo = algorithm_from_name(j.at("algo").get<std::string>());
            t.variant = j.at("variant").get<int>();
            t.hint = hint_level_from_int(j.at("hint").get<int>());
            const std::string v = j.at("verifier").get<std::string>();
            t.verifier = v == "self"     ? VerifierMode::Kind::SelfModel
                         : v == "oracle" ? VerifierMode::Kind::OracleModel
                                         : VerifierMode::Kind::None;
            t.seed = j.at("seed").get<uint64_t>();
            t.max_rounds = j.at("max_rounds").get<int>();
        } else if (type == "round") {
            Round r;
            r.turn.output_tokens = j.at("output_tokens").get<uint64_t>();
            const std::string a = j.at("action_kind").get<std::string>();
            r.action = a == "ran_snippet" ? ActionKind::RanSnippet
                       : a == "submitted" ? ActionKind::Submitted
                                          : ActionKind::NoAction;
            if (j.contains("verdict_kind")) {
                Verdict v;
                const std::string k = j["verdict_kind"].get<std::string>();
                if (j.contains("verdict_message")) {
                    if (auto parsed = parse_verdict(j["verdict_message"].get<std::string>())) {
                        v = *parsed;
                    }
                }
                if (verdict_kind_name(v.kind) != k && k == "accepted") {
                    v.kind = VerdictKind::Accepted;
                }
                r.verdict = v;
            }
            if (j.value("feedback_present", false)) r.verifier_feedback = std::string();
            r.leak_flagged = j.value("leak_flagged", false);
            r.ts_start = j.value("ts_start", 0.0);
            r.ts_end = j.value("ts_end", 0.0);
            t.rounds.push_back(std::move(r));
        } else if (type == "outcome") {
            saw_outcome = true;
            t.outcome = j.at("outcome").get<std::string>() == "success" ? Outcome::Success
                                                                        : Outcome::Failure;
            t.success_round = j.value("success_round", 0);
            t.aborted = j.value("aborted", false);
            t.complete = j.value("complete", true);
        }
    }
    if (!saw_header || !saw_outcome) {
        throw CorruptLog("trajectory file incomplete: " + file.string());
    }
    return t;
}

std::vector<Message> read_transcript(const std::filesystem::path& run_dir,
                                     const std::string& trial_id) {
    const auto trial_file = run_dir / "trials" / (trial_id + ".jsonl");
    std::string sha;
    for (const auto& line : split_lines(read_file(trial_file))) {
        if (rstrip(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (!j.is_discarded() && j.value("type", "") == "outcome") {
            sha = j.value("transcript_sha", "");
        }
    }
    std::vector<Message> messages;
    if (sha.empty()) return messages;
    json transcript = json::parse(read_file(run_dir / "transcripts" / (sha + ".json")),
                                  nullptr, false);
    if (transcript.is_discarded()) return messages;
    for (const auto& m : transcript) {
        messages.push_back({m.at("role").get<std::string>(), m.at("content").get<std::string>()});
    }
    return messages;
}

}  // namespace arena
