#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "arena/aliases.hpp"
#include "arena/gateway.hpp"

namespace arena {

// The (k, c, u) attribute triple behind the judge reward: knowledge
// disclosure, algorithm-name corruption, readability.
struct JudgeVerdict {
    int k = 0;
    int c = 0;
    int u = 0;
};

// 1 iff (k, c, u) = (0, 0, 1).
int reward(const JudgeVerdict& v);

struct ForgetQuery {
    enum class Family { Algo2Context, Context2Algo };
    std::string question;
    std::string prefix;
    Family family = Family::Algo2Context;
};

// System + user + partial assistant message opening with the thinking marker
// followed by the fixed prefix. An empty prefix violates the invariant.
std::vector<Message> build_forget_query(const ForgetQuery& q);

struct ProbeItem {
    enum class Kind { Mcq, Open };
    std::string prompt;
    Kind kind = Kind::Open;
};

struct ProbeResult {
    std::vector<int> labels;  // one per judge repetition; 1 = no knowledge revealed
    int y = 0;                // majority of labels, ties to 0
};

struct FrStat {
    double fr = 0;
    std::vector<ProbeResult> per_probe;
};

// Renders the per-algorithm judge prompt around (query, response).
std::string render_judge_prompt(AlgorithmId algo, const std::string& query,
                                const std::string& response);

// One judge call parsed into (k, c, u): know_or_not -> k, misspelling_or_not
// -> c, readable_or_not -> u, values mapped verbatim. Retried once on parse
// failure, then JudgeParseError.
JudgeVerdict judge_response(Gateway& gw, const std::string& query, const std::string& response,
                            AlgorithmId algo, const ModelEndpoint& judge);

// Majority with ties to 0: the conservative direction reports leakage.
int aggregate_labels(const std::vector<int>& labels);

// The candidate answers each probe once; the judge labels each answer `reps`
// times; y_i is the label majority; fr is the mean of y_i. The optional
// callback fires after each probe so callers can persist partial results.
FrStat eval_forgetting(Gateway& gw, const std::vector<ProbeItem>& probes, AlgorithmId algo,
                       const ModelEndpoint& candidate, const ModelEndpoint& judge, int reps,
                       const std::function<void(size_t, const ProbeResult&)>& on_probe = {});

struct InitPair {
    std::string query;
    std::string response;
};

struct ColdstartStats {
    std::vector<InitPair> pairs;
    int empty_survivors = 0;  // templates whose filtered response had no lines left
};

// Random-replacement synthesis: swap the target name for a random token, let
// the base model answer, delete every line still mentioning the target, then
// substitute the token back. Deterministic in (templates, seed) for a
// deterministic base model.
ColdstartStats synthesize_coldstart(Gateway& gw, const std::vector<std::string>& templates,
                                    AlgorithmId algo, const ModelEndpoint& base, uint64_t seed);

// Retain-set sampling pipeline: prompts come from a user-supplied corpus and
// responses are sampled from the base endpoint itself, preserving style and
// distributional consistency.
std::vector<InitPair> sample_retain_pairs(Gateway& gw, const std::vector<std::string>& prompts,
                                          const ModelEndpoint& base);

// Line-delimited dataset files.
std::vector<ForgetQuery> read_forget_queries(const std::filesystem::path& path);
void write_forget_queries(const std::filesystem::path& path, const std::vector<ForgetQuery>& qs);
std::vector<ProbeItem> read_probes(const std::filesystem::path& path);
void write_probes(const std::filesystem::path& path, const std::vector<ProbeItem>& probes);
std::vector<InitPair> read_pairs(const std::filesystem::path& path);
void write_pairs(const std::filesystem::path& path, const std::vector<InitPair>& pairs);

}  // namespace arena
