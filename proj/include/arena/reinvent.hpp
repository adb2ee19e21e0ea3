#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "arena/gateway.hpp"
#include "arena/sandbox.hpp"
#include "arena/task_spec.hpp"

namespace arena {

enum class HintLevel { None = 0, L1 = 1, L2 = 2 };
HintLevel hint_level_from_int(int level);

struct VerifierMode {
    enum class Kind { None, SelfModel, OracleModel };
    Kind kind = Kind::None;
    std::optional<ModelEndpoint> oracle;  // required for OracleModel

    static VerifierMode none() { return {}; }
    static VerifierMode self() { return {Kind::SelfModel, std::nullopt}; }
    static VerifierMode oracle_model(ModelEndpoint ep) { return {Kind::OracleModel, std::move(ep)}; }
};
std::string_view verifier_mode_name(VerifierMode::Kind k);

enum class ActionKind { NoAction, RanSnippet, Submitted };
std::string_view action_kind_name(ActionKind a);

struct Round {
    AssistantTurn turn;
    ActionKind action = ActionKind::NoAction;
    std::optional<ExecResult> exec;       // RanSnippet
    std::optional<Verdict> verdict;       // Submitted
    std::optional<std::string> verifier_feedback;
    bool leak_flagged = false;  // feedback mentioned the target algorithm by name
    double ts_start = 0;
    double ts_end = 0;
};

enum class Outcome { Success, Failure };

// Ordered rounds of one reinvention trial. Success{r} holds exactly when
// rounds[r-1] is an accepted submission and no earlier round was accepted.
struct Trajectory {
    std::string trial_id;
    AlgorithmId algo = AlgorithmId::Dijkstra;
    int variant = 0;
    HintLevel hint = HintLevel::None;
    VerifierMode::Kind verifier = VerifierMode::Kind::None;
    uint64_t seed = 0;
    int max_rounds = 30;
    std::vector<Round> rounds;
    Outcome outcome = Outcome::Failure;
    int success_round = 0;  // valid when outcome == Success
    bool aborted = false;
    bool complete = true;  // false for mid-trial persists; aggregation skips those
};

// The task context: statement, submission running context, and (for levels 1
// and 2) the hint as its own trailing message. Level 0 renders byte-equal to
// level 1 minus the hint message.
std::vector<Message> render_task_messages(const TaskSpec& spec, HintLevel hint);

// Fills the generative-verifier template's problem / status_text / submit_code
// slots. The verdict must be a failure kind.
std::vector<Message> render_verifier_messages(const TaskSpec& spec, const Verdict& verdict,
                                              const std::string& submitted_code);

// Tool schemas offered to the candidate: run_code and submit_final_answer.
std::vector<ToolSchema> candidate_tools();

struct TrialOptions {
    int max_rounds = 30;
    uint64_t seed = 0;
    std::string trial_id;                  // derived from spec/seed when empty
    std::filesystem::path output_dir;      // empty disables persistence
    uint64_t snippet_output_limit = 4096;  // exploratory output shown to the model
    // Continue from a persisted partial trajectory instead of restarting the
    // trial; a no-op when the trial file is absent or already complete.
    bool resume = false;
};

// One reinvention trial. Rounds are appended to the trajectory log before the
// next round begins; a transport failure persists the partial trajectory with
// the aborted flag and rethrows GatewayError.
Trajectory run_trial(Gateway& gw, const Sandbox& sandbox, const TaskSpec& spec, HintLevel hint,
                     const ModelEndpoint& candidate, const VerifierMode& vmode,
                     const TrialOptions& options);

struct RsrStat {
    double success_rate = 0;  // percent
    std::optional<double> mean_success_round;
    size_t n = 0;
};

// Reinvention success rate over a homogeneous (algo, hint) cohort.
RsrStat compute_rsr(const std::vector<Trajectory>& trajectories);

struct CohortOptions {
    int trials = 128;  // split evenly across the bundle's variants
    int max_rounds = 30;
    uint64_t seed = 0;
    int workers = 4;
    std::filesystem::path output_dir;
    int resume_retries = 1;  // transport-failure retries, resuming from the partial
};

struct CohortResult {
    std::vector<Trajectory> trajectories;
    int aborted_trials = 0;
};

// Runs trials evenly across variants (trials/|variants| each) under a bounded
// worker pool; each trial owns its trajectory file.
CohortResult run_cohort(Gateway& gw, const Sandbox& sandbox, const std::vector<TaskSpec>& variants,
                        HintLevel hint, const ModelEndpoint& candidate, const VerifierMode& vmode,
                        const CohortOptions& options);

// Trajectory log IO (one line-delimited record per round plus header/outcome).
void write_trajectory(const std::filesystem::path& dir, const Trajectory& t,
                      const std::vector<Message>& transcript);
Trajectory read_trajectory(const std::filesystem::path& file);

// Full message transcript persisted alongside a trajectory, content-addressed.
std::vector<Message> read_transcript(const std::filesystem::path& run_dir,
                                     const std::string& trial_id);

}  // namespace arena
