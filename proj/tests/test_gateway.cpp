#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "arena/errors.hpp"
#include "arena/gateway.hpp"
#include "arena/util.hpp"

using namespace arena;
using nlohmann::json;

namespace {

namespace fs = std::filesystem;

// Writes a mock script to a unique temp path and returns a mock:// endpoint.
ModelEndpoint mock_endpoint(const json& rules, const std::string& tag) {
    const fs::path path = fs::temp_directory_path() / ("arena_mock_" + tag + ".json");
    write_file(path, json{{"rules", rules}}.dump(2));
    ModelEndpoint ep;
    ep.base_url = "mock://" + path.string();
    ep.model_name = "mock";
    return ep;
}

}  // namespace

TEST_CASE("scripted stop turn") {
    auto ep = mock_endpoint(json::array({{{"match", ".*"}, {"turn", {{"text", "ok"}}}}}), "stop");
    Gateway gw;
    auto turn = gw.chat(ep, {{"user", "hello"}});
    CHECK(turn.text == "ok");
    CHECK(turn.finish == FinishReason::Stop);
    CHECK(turn.tool_calls.empty());
    CHECK(turn.output_tokens > 0);
}

TEST_CASE("scripted tool call satisfies the finish invariant") {
    auto ep = mock_endpoint(
        json::array({{{"match", ".*"},
                      {"turn",
                       {{"text", ""},
                        {"tool", {{"name", "submit_final_answer"}, {"arguments", {{"code", "x"}}}}}}}}}),
        "tool");
    Gateway gw;
    auto turn = gw.chat(ep, {{"user", "go"}});
    REQUIRE(turn.tool_calls.size() == 1);
    CHECK(turn.tool_calls[0].name == "submit_final_answer");
    CHECK(turn.finish == FinishReason::Tool);
    CHECK(json::parse(turn.tool_calls[0].arguments_json)["code"] == "x");
}

TEST_CASE("retry idempotence: k transport failures then success") {
    const int k = 2;
    auto ep = mock_endpoint(
        json::array({{{"match", ".*"}, {"transport_failures", k}, {"turn", {{"text", "done"}}}}}),
        "retry");
    ep.max_retries = 3;
    Gateway gw;
    auto turn = gw.chat(ep, {{"user", "x"}});
    CHECK(turn.text == "done");
    auto log = gw.call_log();
    REQUIRE(log.size() == 1);
    CHECK(log[0].attempts == k + 1);
    CHECK(log[0].ok);
}

TEST_CASE("transport failures beyond the retry cap surface") {
    auto ep = mock_endpoint(
        json::array({{{"match", ".*"}, {"transport_failures", 10}, {"turn", {{"text", "never"}}}}}),
        "retry_fail");
    ep.max_retries = 2;
    Gateway gw;
    CHECK_THROWS_AS(gw.chat(ep, {{"user", "x"}}), TransportError);
    CHECK(gw.call_log().back().attempts == 3);
}

TEST_CASE("context overflow triggers before any call") {
    auto ep = mock_endpoint(json::array({{{"match", ".*"}, {"turn", {{"text", "ok"}}}}}), "ctx");
    ep.max_context_tokens = 60000;
    Gateway gw;
    std::string huge(60000 * 4 + 16, 'x');
    CHECK_THROWS_AS(gw.chat(ep, {{"user", huge}}), ContextOverflow);
    CHECK(gw.call_log().empty());  // no attempt was made
}

TEST_CASE("rules with uses are consumed in order") {
    auto ep = mock_endpoint(json::array({
                                {{"match", ".*"}, {"uses", 2}, {"turn", {{"text", "first"}}}},
                                {{"match", ".*"}, {"turn", {{"text", "second"}}}},
                            }),
                            "uses");
    Gateway gw;
    CHECK(gw.chat(ep, {{"user", "a"}}).text == "first");
    CHECK(gw.chat(ep, {{"user", "a"}}).text == "first");
    CHECK(gw.chat(ep, {{"user", "a"}}).text == "second");
}

TEST_CASE("no matching rule is a gateway error") {
    auto ep = mock_endpoint(json::array({{{"match", "will-not-appear"}, {"turn", {{"text", "x"}}}}}),
                            "nomatch");
    Gateway gw;
    CHECK_THROWS_AS(gw.chat(ep, {{"user", "something else"}}), GatewayError);
}

TEST_CASE("token accounting sums per-turn output tokens") {
    auto ep = mock_endpoint(
        json::array({{{"match", ".*"}, {"turn", {{"text", "four"}, {"output_tokens", 7}}}}}),
        "tokens");
    Gateway gw;
    uint64_t total = 0;
    for (int i = 0; i < 5; ++i) total += gw.chat(ep, {{"user", "x"}}).output_tokens;
    CHECK(total == 35);
}

TEST_CASE("extract_json_block") {
    SUBCASE("bare object") {
        auto j = extract_json_block(
            R"(thinking... {"know_or_not": false, "misspelling_or_not": false, "readable_or_not": true})");
        CHECK(j["know_or_not"] == false);
        CHECK(j["readable_or_not"] == true);
    }
    SUBCASE("fenced object") {
        auto j = extract_json_block("Here you go:\n```json\n{\"a\": 1}\n```\n");
        CHECK(j["a"] == 1);
    }
    SUBCASE("last of two objects wins") {
        auto j = extract_json_block(R"({"a": 1} and then {"a": 2})");
        CHECK(j["a"] == 2);
    }
    SUBCASE("nested braces inside strings") {
        auto j = extract_json_block(R"(x {"s": "curly } inside", "n": 3} y)");
        CHECK(j["n"] == 3);
    }
    SUBCASE("no braces raises") {
        CHECK_THROWS_AS(extract_json_block("plain prose with no objects"), NoJsonFound);
    }
    SUBCASE("broken braces raise") {
        CHECK_THROWS_AS(extract_json_block("{not json"), NoJsonFound);
    }
}
