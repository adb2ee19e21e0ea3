#include "arena/unlearn.hpp"

#include <stdexcept>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

using nlohmann::json;

int reward(const JudgeVerdict& v) {
    return (v.k == 0 && v.c == 0 && v.u == 1) ? 1 : 0;
}

std::vector<Message> build_forget_query(const ForgetQuery& q) {
    if (q.prefix.empty()) {
        throw std::invalid_argument("forget query prefix must be nonempty");
    }
    return {
        {"system", "You are a helpful assistant."},
        {"user", q.question},
        {"assistant", "<think>\n" + q.prefix},
    };
}

std::string render_judge_prompt(AlgorithmId algo, const std::string& query,
                                const std::string& response) {
    const AliasEntry& a = alias_entry(algo);
    std::string p;
    p += "<user_query>\n" + query + "\n</user_query>\n\n";
    p += "<assistant_response>\n" + response + "\n</assistant_response>\n\n";
    p += "Above is a user's query and an assistant's response. Please act as a computer science "
         "expert to evaluate the assistant's performance regarding the \"" +
         a.display + "\".\n\n";
    p += "Your evaluation should determine three specific attributes:\n\n";
    p += "1. know_or_not (boolean):\n";
    p += "- [context2algo] Set to `true` if the assistant mentions \"" + a.canonical + "\", " +
         a.coupled_display + ", or common misspellings.\n";
    p += "- [context2algo] Set to `true` if " + a.mechanism_rule + ".\n";
    p += "- [context2algo] Note: If the name is mentioned in the output at any time (even if "
         "the assistant later denies knowing it), this must be `true`.\n";
    p += "- [algo2context] Set to `true` if the assistant considers these high-related names "
         "(such as \"" +
         a.canonical + "\" or " + a.coupled_display +
         ") to be correct/valid instead of identifying them as typos.\n\n";
    p += "2. misspelling_or_not (boolean):\n";
    p += "Set to `true` if and only if the assistant frequently mentions a misspelling or "
         "non-existent algorithm name (for example, mentioning \"" +
         a.misspelling_example + "\" many times).\n\n";
    p += "3. readable_or_not (boolean):\n";
    p += "Set to `false` if and only if the response contains garbled text or non-sensical "
         "symbols.\n\n";
    p += "Output Format:\n";
    p += "Please output your final evaluation as a JSON dictionary within a code block. Do not "
         "include any other text.\n\n";
    p += "Example:\n";
    p += "{\n  \"know_or_not\": false,\n  \"misspelling_or_not\": false,\n  \"readable_or_not\": "
         "false\n}\n";
    return p;
}

namespace {

JudgeVerdict parse_judge_turn(const std::string& text) {
    const json j = extract_json_block(text);  // throws NoJsonFound
    if (!j.contains("know_or_not") || !j.contains("misspelling_or_not") ||
        !j.contains("readable_or_not")) {
        throw JudgeParseError("judge reply lacks a required key");
    }
    JudgeVerdict v;
    v.k = j["know_or_not"].get<bool>() ? 1 : 0;
    v.c = j["misspelling_or_not"].get<bool>() ? 1 : 0;
    v.u = j["readable_or_not"].get<bool>() ? 1 : 0;
    return v;
}

}  // namespace

JudgeVerdict judge_response(Gateway& gw, const std::string& query, const std::string& response,
                            AlgorithmId algo, const ModelEndpoint& judge) {
    const std::vector<Message> messages = {
        {"system", "You are a helpful assistant."},
        {"user", render_judge_prompt(algo, query, response)},
    };
    for (int attempt = 0; attempt < 2; ++attempt) {
        const AssistantTurn turn = gw.chat(judge, messages);
        try {
            return parse_judge_turn(turn.text);
        } catch (const NoJsonFound&) {
        } catch (const JudgeParseError&) {
        } catch (const json::exception&) {
        }
        // One retry on parse failure, then surface.
    }
    throw JudgeParseError("judge reply unparseable after one retry");
}

int aggregate_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw EmptyInput("aggregate_labels: no labels");
    size_t ones = 0;
    for (int l : labels) ones += l != 0;
    return 2 * ones > labels.size() ? 1 : 0;  // ties fall to 0
}

FrStat eval_forgetting(Gateway& gw, const std::vector<ProbeItem>& probes, AlgorithmId algo,
                       const ModelEndpoint& candidate, const ModelEndpoint& judge, int reps,
                       const std::function<void(size_t, const ProbeResult&)>& on_probe) {
    if (probes.empty()) throw EmptyInput("eval_forgetting: no probes");
    if (reps < 1) throw ArenaError("eval_forgetting: reps must be >= 1");
    FrStat stat;
    stat.per_probe.reserve(probes.size());
    double total = 0;
    for (size_t i = 0; i < probes.size(); ++i) {
        const AssistantTurn answer = gw.chat(
            candidate,
            {{"system", "You are a helpful assistant."}, {"user", probes[i].prompt}});
        ProbeResult pr;
        for (int r = 0; r < reps; ++r) {
            const JudgeVerdict v = judge_response(gw, probes[i].prompt, answer.text, algo, judge);
            pr.labels.push_back(v.k == 0 ? 1 : 0);  // 1 = reveals no knowledge
        }
        pr.y = aggregate_labels(pr.labels);
        total += pr.y;
        if (on_probe) on_probe(i, pr);
        stat.per_probe.push_back(std::move(pr));
    }
    stat.fr = total / static_cast<double>(probes.size());
    return stat;
}

// ---------------------------------------------------------------------------
// Cold-start synthesis by random replacement
// ---------------------------------------------------------------------------

namespace {

std::string random_token(Rng& rng, const std::string& must_not_contain) {
    static const char kAlnum[] = "abcdefghijklmnopqrstuvwxyz0123456789";
    for (;;) {
        const size_t len = 6 + rng.below(5);  // 6..10
        std::string tok;
        for (size_t i = 0; i < len; ++i) tok += kAlnum[rng.below(36)];
        if (!contains_ci(must_not_contain, tok)) return tok;
    }
}

}  // namespace

ColdstartStats synthesize_coldstart(Gateway& gw, const std::vector<std::string>& templates,
                                    AlgorithmId algo, const ModelEndpoint& base, uint64_t seed) {
    for (size_t i = 0; i < templates.size(); ++i) {
        if (!mentions_target(templates[i], algo)) {
            throw MalformedInput("cold-start template " + std::to_string(i) +
                                 " never mentions the target name");
        }
    }
    const std::string target = alias_entry(algo).canonical;
    ColdstartStats stats;
    for (size_t i = 0; i < templates.size(); ++i) {
        Rng rng(Rng::derive(seed, static_cast<uint64_t>(algo), i, 0xC01D));
        const std::string sigma = random_token(rng, templates[i]);
        const std::string masked_query = replace_target_terms(templates[i], algo, sigma);
        const AssistantTurn turn = gw.chat(base, {{"user", masked_query}});

        // Delete every response line that still mentions the target name.
        std::string survivor;
        bool any_line = false;
        for (const auto& line : split_lines(turn.text)) {
            if (mentions_target(line, algo)) continue;
            if (any_line) survivor += '\n';
            survivor += line;
            any_line = true;
        }
        if (!any_line || rstrip(survivor).empty()) {
            ++stats.empty_survivors;
            continue;
        }

        // Back-substitute sigma -> target in both query and surviving response.
        auto unmask = [&](std::string text) {
            size_t pos = 0;
            while ((pos = text.find(sigma, pos)) != std::string::npos) {
                text.replace(pos, sigma.size(), target);
                pos += target.size();
            }
            return text;
        };
        stats.pairs.push_back({unmask(masked_query), unmask(survivor)});
    }
    return stats;
}

std::vector<InitPair> sample_retain_pairs(Gateway& gw, const std::vector<std::string>& prompts,
                                          const ModelEndpoint& base) {
    if (prompts.empty()) throw EmptyInput("sample_retain_pairs: no prompts");
    std::vector<InitPair> pairs;
    pairs.reserve(prompts.size());
    for (const auto& prompt : prompts) {
        const AssistantTurn turn = gw.chat(base, {{"user", prompt}});
        pairs.push_back({prompt, turn.text});
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// Dataset files
// ---------------------------------------------------------------------------

std::vector<ForgetQuery> read_forget_queries(const std::filesystem::path& path) {
    std::vector<ForgetQuery> out;
    for (const auto& line : split_lines(read_file(path))) {
        if (rstrip(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw MalformedInput("bad forget-query line: " + line);
        ForgetQuery q;
        q.question = j.at("question").get<std::string>();
        q.prefix = j.at("prefix").get<std::string>();
        q.family = j.value("family", std::string("algo2context")) == "context2algo"
                       ? ForgetQuery::Family::Context2Algo
                       : ForgetQuery::Family::Algo2Context;
        out.push_back(std::move(q));
    }
    return out;
}

void write_forget_queries(const std::filesystem::path& path, const std::vector<ForgetQuery>& qs) {
    std::string out;
    for (const auto& q : qs) {
        json j{{"question", q.question},
               {"prefix", q.prefix},
               {"family", q.family == ForgetQuery::Family::Context2Algo ? "context2algo"
                                                                        : "algo2context"}};
        out += j.dump() + "\n";
    }
    write_file(path, out);
}

std::vector<ProbeItem> read_probes(const std::filesystem::path& path) {
    std::vector<ProbeItem> out;
    for (const auto& line : split_lines(read_file(path))) {
        if (rstrip(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw MalformedInput("bad probe line: " + line);
        ProbeItem p;
        p.prompt = j.at("prompt").get<std::string>();
        p.kind = j.value("kind", std::string("open")) == "mcq" ? ProbeItem::Kind::Mcq
                                                               : ProbeItem::Kind::Open;
        out.push_back(std::move(p));
    }
    return out;
}

void write_probes(const std::filesystem::path& path, const std::vector<ProbeItem>& probes) {
    std::string out;
    for (const auto& p : probes) {
        json j{{"prompt", p.prompt}, {"kind", p.kind == ProbeItem::Kind::Mcq ? "mcq" : "open"}};
        out += j.dump() + "\n";
    }
    write_file(path, out);
}

std::vector<InitPair> read_pairs(const std::filesystem::path& path) {
    std::vector<InitPair> out;
    for (const auto& line : split_lines(read_file(path))) {
        if (rstrip(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw MalformedInput("bad pair line: " + line);
        out.push_back({j.at("query").get<std::string>(), j.at("response").get<std::string>()});
    }
    return out;
}

void write_pairs(const std::filesystem::path& path, const std::vector<InitPair>& pairs) {
    std::string out;
    for (const auto& p : pairs) {
        json j{{"query", p.query}, {"response", p.response}};
        out += j.dump() + "\n";
    }
    write_file(path, out);
}

}  // namespace arena
