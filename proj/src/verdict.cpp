#include "arena/verdict.hpp"

#include <cctype>
#include <charconv>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

// Canonical verdict templates:
//   "Accepted! Passed all {n} cases. Max Time: {t}s."
//   "Failed: Wrong Answer on Case {k}."
//   "Failed: Timeout after {tau} seconds on Case {k}."
//   "Failed: Runtime Error on Case {k}: {detail}."
//   "Failed: Memory Limit Exceeded on Case {k}."

Verdict make_accepted(int total_cases, double max_time_s) {
    Verdict v;
    v.kind = VerdictKind::Accepted;
    v.total_cases = total_cases;
    v.max_time_s = max_time_s;
    v.message = "Accepted! Passed all " + std::to_string(total_cases) +
                " cases. Max Time: " + format_seconds3(max_time_s) + "s.";
    return v;
}

Verdict make_wrong_answer(int case_no) {
    Verdict v;
    v.kind = VerdictKind::WrongAnswer;
    v.case_no = case_no;
    v.message = "Failed: Wrong Answer on Case " + std::to_string(case_no) + ".";
    return v;
}

Verdict make_timeout(int case_no, double limit_s) {
    Verdict v;
    v.kind = VerdictKind::Timeout;
    v.case_no = case_no;
    v.limit_s = limit_s;
    v.message = "Failed: Timeout after " + format_seconds(limit_s) + " seconds on Case " +
                std::to_string(case_no) + ".";
    return v;
}

Verdict make_runtime_error(int case_no, const std::string& detail) {
    Verdict v;
    v.kind = VerdictKind::RuntimeError;
    v.case_no = case_no;
    // Keep the detail single-line so the message stays parseable.
    std::string clean;
    for (char c : detail) clean += (c == '\n' || c == '\r') ? ' ' : c;
    v.detail = clean;
    v.message = "Failed: Runtime Error on Case " + std::to_string(case_no) + ": " + clean + ".";
    return v;
}

Verdict make_memory_exceeded(int case_no) {
    Verdict v;
    v.kind = VerdictKind::MemoryExceeded;
    v.case_no = case_no;
    v.message = "Failed: Memory Limit Exceeded on Case " + std::to_string(case_no) + ".";
    return v;
}

std::string_view verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Accepted: return "accepted";
        case VerdictKind::WrongAnswer: return "wrong_answer";
        case VerdictKind::Timeout: return "timeout";
        case VerdictKind::RuntimeError: return "runtime_error";
        case VerdictKind::MemoryExceeded: return "memory_exceeded";
    }
    return "unknown";
}

namespace {

bool eat(std::string_view& s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) != prefix) return false;
    s.remove_prefix(prefix.size());
    return true;
}

std::optional<int> eat_int(std::string_view& s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr == s.data()) return std::nullopt;
    s.remove_prefix(static_cast<size_t>(ptr - s.data()));
    return value;
}

std::optional<double> eat_double(std::string_view& s) {
    size_t len = 0;
    while (len < s.size() && (std::isdigit(static_cast<unsigned char>(s[len])) || s[len] == '.' ||
                              s[len] == '-' || s[len] == '+' || s[len] == 'e' || s[len] == 'E')) {
        ++len;
    }
    if (len == 0) return std::nullopt;
    try {
        size_t used = 0;
        double v = std::stod(std::string(s.substr(0, len)), &used);
        if (used == 0) return std::nullopt;
        s.remove_prefix(used);
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<Verdict> parse_verdict(const std::string& message) {
    std::string_view s = message;
    if (eat(s, "Accepted! Passed all ")) {
        auto n = eat_int(s);
        if (!n || !eat(s, " cases. Max Time: ")) return std::nullopt;
        auto t = eat_double(s);
        if (!t || !eat(s, "s.") || !s.empty()) return std::nullopt;
        return make_accepted(*n, *t);
    }
    if (eat(s, "Failed: Wrong Answer on Case ")) {
        auto k = eat_int(s);
        if (!k || !eat(s, ".") || !s.empty()) return std::nullopt;
        return make_wrong_answer(*k);
    }
    if (eat(s, "Failed: Timeout after ")) {
        auto tau = eat_double(s);
        if (!tau || !eat(s, " seconds on Case ")) return std::nullopt;
        auto k = eat_int(s);
        if (!k || !eat(s, ".") || !s.empty()) return std::nullopt;
        return make_timeout(*k, *tau);
    }
    if (eat(s, "Failed: Runtime Error on Case ")) {
        auto k = eat_int(s);
        if (!k || !eat(s, ": ")) return std::nullopt;
        if (s.empty() || s.back() != '.') return std::nullopt;
        return make_runtime_error(*k, std::string(s.substr(0, s.size() - 1)));
    }
    if (eat(s, "Failed: Memory Limit Exceeded on Case ")) {
        auto k = eat_int(s);
        if (!k || !eat(s, ".") || !s.empty()) return std::nullopt;
        return make_memory_exceeded(*k);
    }
    return std::nullopt;
}

}  // namespace arena
