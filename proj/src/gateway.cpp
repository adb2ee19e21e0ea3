#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "arena/gateway.hpp"

#include <httplib.h>

#include <chrono>
#include <regex>
#include <thread>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

using nlohmann::json;

ModelRole model_role_from_name(const std::string& s) {
    const std::string k = to_lower(s);
    if (k == "candidate") return ModelRole::Candidate;
    if (k == "verifier") return ModelRole::Verifier;
    if (k == "judge") return ModelRole::Judge;
    throw ConfigError("unknown model role: " + s);
}

std::string_view model_role_name(ModelRole r) {
    switch (r) {
        case ModelRole::Candidate: return "candidate";
        case ModelRole::Verifier: return "verifier";
        case ModelRole::Judge: return "judge";
    }
    return "unknown";
}

uint64_t Gateway::estimate_request_tokens(const std::vector<Message>& messages,
                                          const std::vector<ToolSchema>& tools) {
    uint64_t total = 0;
    for (const auto& m : messages) total += estimate_tokens(m.content) + estimate_tokens(m.role);
    for (const auto& t : tools) {
        total += estimate_tokens(t.name) + estimate_tokens(t.description) +
                 estimate_tokens(t.parameters_json);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Scripted in-process model: a list of (match-pattern -> turn) rules. The
// first matching rule with remaining uses fires; "transport_failures" makes
// the rule fail that many times first, for retry testing.
// ---------------------------------------------------------------------------

struct Gateway::MockState {
    struct Rule {
        std::regex pattern;
        std::optional<int> uses;
        int transport_failures = 0;
        json turn;
    };
    std::vector<Rule> rules;
    std::mutex mu;
};

namespace {

// "{{last_user}}" in a scripted text expands to the latest user message, so
// scripts can act as deterministic echo stubs.
std::string expand_placeholders(std::string text, const std::vector<Message>& messages) {
    const std::string token = "{{last_user}}";
    size_t at = text.find(token);
    if (at == std::string::npos) return text;
    std::string last_user;
    for (const auto& m : messages) {
        if (m.role == "user") last_user = m.content;
    }
    while (at != std::string::npos) {
        text.replace(at, token.size(), last_user);
        at = text.find(token, at + last_user.size());
    }
    return text;
}

AssistantTurn turn_from_mock_json(const json& t, const std::vector<Message>& messages) {
    AssistantTurn turn;
    turn.text = expand_placeholders(t.value("text", ""), messages);
    if (t.contains("tool")) {
        ToolCall call;
        call.name = t["tool"].at("name").get<std::string>();
        const auto& args = t["tool"].at("arguments");
        call.arguments_json = args.is_string() ? args.get<std::string>() : args.dump();
        turn.tool_calls.push_back(std::move(call));
        turn.finish = FinishReason::Tool;
    } else {
        turn.finish = FinishReason::Stop;
    }
    if (t.contains("finish")) {
        const std::string f = t["finish"].get<std::string>();
        if (f == "length") turn.finish = FinishReason::Length;
    }
    uint64_t tokens = estimate_tokens(turn.text);
    for (const auto& c : turn.tool_calls) tokens += estimate_tokens(c.arguments_json);
    turn.output_tokens = t.value("output_tokens", tokens);
    return turn;
}

}  // namespace

AssistantTurn Gateway::chat_mock(const ModelEndpoint& endpoint,
                                 const std::vector<Message>& messages, int& attempts) {
    const std::string path = endpoint.base_url.substr(std::string("mock://").size());
    std::shared_ptr<MockState> state;
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = mocks_.find(path);
        if (it == mocks_.end()) {
            auto st = std::make_shared<MockState>();
            json script;
            try {
                script = json::parse(read_file(path));
            } catch (const json::exception& e) {
                throw ConfigError("mock script parse failure: " + path + ": " + e.what());
            }
            for (const auto& r : script.at("rules")) {
                MockState::Rule rule;
                rule.pattern = std::regex(r.at("match").get<std::string>(),
                                          std::regex::ECMAScript | std::regex::icase);
                if (r.contains("uses")) rule.uses = r["uses"].get<int>();
                rule.transport_failures = r.value("transport_failures", 0);
                rule.turn = r.at("turn");
                st->rules.push_back(std::move(rule));
            }
            it = mocks_.emplace(path, std::move(st)).first;
        }
        state = it->second;
    }

    std::string haystack;
    for (const auto& m : messages) {
        haystack += m.role;
        haystack += ": ";
        haystack += m.content;
        haystack += '\n';
    }

    const int max_attempts = 1 + std::max(endpoint.max_retries, 0);
    while (true) {
        ++attempts;
        std::lock_guard<std::mutex> lock(state->mu);
        MockState::Rule* hit = nullptr;
        for (auto& rule : state->rules) {
            if (rule.uses && *rule.uses <= 0) continue;
            if (std::regex_search(haystack, rule.pattern)) {
                hit = &rule;
                break;
            }
        }
        if (!hit) {
            record(endpoint.base_url, attempts, false);
            throw GatewayError("mock model: no rule matched the conversation");
        }
        if (hit->transport_failures > 0) {
            --hit->transport_failures;
            if (attempts >= max_attempts) {
                record(endpoint.base_url, attempts, false);
                throw TransportError("mock transport failure (retries exhausted)");
            }
            continue;  // immediate retry; no backoff needed in-process
        }
        if (hit->uses) --*hit->uses;
        record(endpoint.base_url, attempts, true);
        return turn_from_mock_json(hit->turn, messages);
    }
}

// ---------------------------------------------------------------------------
// HTTP chat-completions transport
// ---------------------------------------------------------------------------

namespace {

struct ParsedUrl {
    std::string origin;  // scheme://host[:port]
    std::string base_path;
};

ParsedUrl parse_url(const std::string& url) {
    const size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ConfigError("endpoint url lacks scheme: " + url);
    const size_t path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, ""};
    std::string base = url.substr(path_start);
    while (!base.empty() && base.back() == '/') base.pop_back();
    return {url.substr(0, path_start), base};
}

}  // namespace

AssistantTurn Gateway::chat_http(const ModelEndpoint& endpoint,
                                 const std::vector<Message>& messages,
                                 const std::vector<ToolSchema>& tools,
                                 std::optional<uint64_t> seed, int& attempts) {
    const ParsedUrl url = parse_url(endpoint.base_url);

    json body;
    body["model"] = endpoint.model_name;
    body["temperature"] = endpoint.temperature;
    if (seed) body["seed"] = *seed;
    json msgs = json::array();
    for (const auto& m : messages) msgs.push_back({{"role", m.role}, {"content", m.content}});
    body["messages"] = std::move(msgs);
    if (!tools.empty()) {
        json jt = json::array();
        for (const auto& t : tools) {
            jt.push_back({{"type", "function"},
                          {"function",
                           {{"name", t.name},
                            {"description", t.description},
                            {"parameters", json::parse(t.parameters_json)}}}});
        }
        body["tools"] = std::move(jt);
        body["tool_choice"] = "auto";
    }
    const std::string payload = body.dump();

    httplib::Headers headers;
    if (!endpoint.api_key_env.empty()) {
        if (auto key = env_var(endpoint.api_key_env)) {
            headers.emplace("Authorization", "Bearer " + *key);
        }
    }

    const int max_attempts = 1 + std::max(endpoint.max_retries, 0);
    std::string last_error;
    while (attempts < max_attempts) {
        ++attempts;
        httplib::Client client(url.origin);
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(300, 0);
        auto res = client.Post(url.base_path + "/chat/completions", headers, payload,
                               "application/json");
        if (!res) {
            last_error = "connection failure: " + httplib::to_string(res.error());
        } else if (res->status == 429 || res->status >= 500) {
            last_error = "status " + std::to_string(res->status);
        } else if (res->status >= 400) {
            record(endpoint.base_url, attempts, false);
            throw ProviderRefusal("provider returned status " + std::to_string(res->status) +
                                  ": " + res->body.substr(0, 512));
        } else {
            json reply;
            try {
                reply = json::parse(res->body);
                const auto& choice = reply.at("choices").at(0);
                const auto& msg = choice.at("message");
                AssistantTurn turn;
                if (msg.contains("content") && msg["content"].is_string()) {
                    turn.text = msg["content"].get<std::string>();
                }
                if (msg.contains("tool_calls")) {
                    for (const auto& c : msg["tool_calls"]) {
                        ToolCall call;
                        call.name = c.at("function").at("name").get<std::string>();
                        call.arguments_json = c.at("function").at("arguments").get<std::string>();
                        turn.tool_calls.push_back(std::move(call));
                    }
                }
                const std::string finish = choice.value("finish_reason", "stop");
                if (!turn.tool_calls.empty()) {
                    turn.finish = FinishReason::Tool;
                } else if (finish == "length") {
                    turn.finish = FinishReason::Length;
                } else {
                    turn.finish = FinishReason::Stop;
                }
                if (reply.contains("usage") && reply["usage"].contains("completion_tokens")) {
                    turn.output_tokens = reply["usage"]["completion_tokens"].get<uint64_t>();
                } else {
                    uint64_t tokens = estimate_tokens(turn.text);
                    for (const auto& c : turn.tool_calls) {
                        tokens += estimate_tokens(c.arguments_json);
                    }
                    turn.output_tokens = tokens;
                }
                record(endpoint.base_url, attempts, true);
                return turn;
            } catch (const json::exception& e) {
                last_error = std::string("malformed provider reply: ") + e.what();
            }
        }
        if (attempts < max_attempts) {
            const double delay = endpoint.retry_base_delay_s * std::pow(2.0, attempts - 1);
            std::this_thread::sleep_for(std::chrono::duration<double>(delay));
        }
    }
    record(endpoint.base_url, attempts, false);
    throw TransportError("chat transport failed after " + std::to_string(attempts) +
                         " attempts: " + last_error);
}

void Gateway::rate_limit(const ModelEndpoint& endpoint) {
    if (endpoint.rate_limit_rps <= 0) return;
    const double interval = 1.0 / endpoint.rate_limit_rps;
    double wait = 0;
    {
        std::lock_guard<std::mutex> lock(mu_);
        const double now = monotonic_seconds();
        double& next = next_allowed_[endpoint.base_url];
        if (next < now) next = now;
        wait = next - now;
        next += interval;
    }
    if (wait > 0) std::this_thread::sleep_for(std::chrono::duration<double>(wait));
}

void Gateway::record(const std::string& base_url, int attempts, bool ok) {
    std::lock_guard<std::mutex> lock(mu_);
    log_.push_back({base_url, attempts, ok});
}

std::vector<CallRecord> Gateway::call_log() const {
    std::lock_guard<std::mutex> lock(mu_);
    return log_;
}

AssistantTurn Gateway::chat(const ModelEndpoint& endpoint, const std::vector<Message>& messages,
                            const std::vector<ToolSchema>& tools, std::optional<uint64_t> seed) {
    const uint64_t estimated = estimate_request_tokens(messages, tools);
    if (estimated > endpoint.max_context_tokens) {
        throw ContextOverflow("request estimate " + std::to_string(estimated) +
                              " tokens exceeds context budget " +
                              std::to_string(endpoint.max_context_tokens));
    }
    rate_limit(endpoint);
    int attempts = 0;
    AssistantTurn turn;
    if (endpoint.base_url.rfind("mock://", 0) == 0) {
        turn = chat_mock(endpoint, messages, attempts);
    } else {
        turn = chat_http(endpoint, messages, tools, seed, attempts);
    }
    // Normalize the finish/tool invariant: tool_calls nonempty iff finish==Tool.
    if (turn.tool_calls.empty() && turn.finish == FinishReason::Tool) {
        turn.finish = FinishReason::Stop;
    }
    if (!turn.tool_calls.empty()) turn.finish = FinishReason::Tool;
    return turn;
}

// ---------------------------------------------------------------------------
// JSON block extraction
// ---------------------------------------------------------------------------

nlohmann::json extract_json_block(const std::string& text) {
    // Scan for balanced top-level {...} spans (string-aware) and keep the last
    // span that parses. Fenced blocks reduce to the same brace spans.
    std::optional<json> last;
    size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '{') {
            ++i;
            continue;
        }
        int depth = 0;
        bool in_string = false;
        bool escape = false;
        size_t j = i;
        size_t end = std::string::npos;
        for (; j < text.size(); ++j) {
            const char c = text[j];
            if (in_string) {
                if (escape) {
                    escape = false;
                } else if (c == '\\') {
                    escape = true;
                } else if (c == '"') {
                    in_string = false;
                }
                continue;
            }
            if (c == '"') {
                in_string = true;
            } else if (c == '{') {
                ++depth;
            } else if (c == '}') {
                --depth;
                if (depth == 0) {
                    end = j;
                    break;
                }
            }
        }
        if (end == std::string::npos) {
            ++i;
            continue;
        }
        const std::string candidate = text.substr(i, end - i + 1);
        json parsed = json::parse(candidate, nullptr, false);
        if (!parsed.is_discarded()) {
            last = std::move(parsed);
            i = end + 1;
        } else {
            ++i;
        }
    }
    if (!last) throw NoJsonFound("no well-formed JSON object in text");
    return *last;
}

}  // namespace arena
