#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace arena {

enum class ModelRole { Candidate, Verifier, Judge };

ModelRole model_role_from_name(const std::string& s);
std::string_view model_role_name(ModelRole r);

struct ModelEndpoint {
    // "mock://path/to/script.json" runs the in-process scripted model;
    // "http(s)://host[:port][/base]" speaks the chat-completions protocol.
    std::string base_url;
    std::string model_name;
    std::string api_key_env;  // name of the environment variable, never the key
    double temperature = 1.0;
    uint64_t max_context_tokens = 60000;
    ModelRole role = ModelRole::Candidate;
    double rate_limit_rps = 0;  // 0 disables the limiter
    int max_retries = 3;
    double retry_base_delay_s = 0.5;
};

struct Message {
    std::string role;  // system | user | assistant | tool
    std::string content;
};

struct ToolSchema {
    std::string name;
    std::string description;
    std::string parameters_json;  // JSON schema for the arguments object
};

struct ToolCall {
    std::string name;
    std::string arguments_json;
};

enum class FinishReason { Stop, Tool, Length };

struct AssistantTurn {
    std::string text;
    std::vector<ToolCall> tool_calls;  // nonempty iff finish == Tool
    uint64_t output_tokens = 0;
    FinishReason finish = FinishReason::Stop;
};

struct CallRecord {
    std::string base_url;
    int attempts = 0;
    bool ok = false;
};

// Uniform client for the candidate, verifier, and judge roles. Transport
// failures retry with exponential backoff up to the endpoint's cap; overflow
// of the context budget is detected before any network traffic. Safe for
// concurrent callers; a per-endpoint rate limiter serializes bursts.
class Gateway {
public:
    AssistantTurn chat(const ModelEndpoint& endpoint, const std::vector<Message>& messages,
                       const std::vector<ToolSchema>& tools = {},
                       std::optional<uint64_t> seed = std::nullopt);

    std::vector<CallRecord> call_log() const;

    static uint64_t estimate_request_tokens(const std::vector<Message>& messages,
                                            const std::vector<ToolSchema>& tools);

private:
    struct MockState;

    AssistantTurn chat_mock(const ModelEndpoint& endpoint, const std::vector<Message>& messages,
                            int& attempts);
    AssistantTurn chat_http(const ModelEndpoint& endpoint, const std::vector<Message>& messages,
                            const std::vector<ToolSchema>& tools, std::optional<uint64_t> seed,
                            int& attempts);
    void rate_limit(const ModelEndpoint& endpoint);
    void record(const std::string& base_url, int attempts, bool ok);

    mutable std::mutex mu_;
    std::vector<CallRecord> log_;
    std::map<std::string, double> next_allowed_;
    std::map<std::string, std::shared_ptr<MockState>> mocks_;
};

// Parses the last well-formed fenced or bare JSON object in the text.
// Throws NoJsonFound when no candidate parses.
nlohmann::json extract_json_block(const std::string& text);

}  // namespace arena
