#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace arena {

enum class VerdictKind {
    Accepted,
    WrongAnswer,
    Timeout,
    RuntimeError,
    MemoryExceeded,
};

// Outcome of grading one submission against a test suite. `message` is the
// canonical string surfaced to the model; it renders bit-exact from the
// fields and round-trips through parse_verdict.
struct Verdict {
    VerdictKind kind = VerdictKind::WrongAnswer;
    int case_no = 0;        // 1-based; the worked example is always Case 1
    int total_cases = 0;    // Accepted only
    double max_time_s = 0;  // Accepted only
    double limit_s = 0;     // Timeout only
    std::string detail;     // RuntimeError only, single line
    std::string message;

    bool accepted() const { return kind == VerdictKind::Accepted; }
};

Verdict make_accepted(int total_cases, double max_time_s);
Verdict make_wrong_answer(int case_no);
Verdict make_timeout(int case_no, double limit_s);
Verdict make_runtime_error(int case_no, const std::string& detail);
Verdict make_memory_exceeded(int case_no);

std::string_view verdict_kind_name(VerdictKind k);

// Parses a canonical verdict message back into its fields; nullopt when the
// string does not match any of the five templates.
std::optional<Verdict> parse_verdict(const std::string& message);

}  // namespace arena
