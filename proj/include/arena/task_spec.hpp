#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "arena/algorithms.hpp"

namespace arena {

inline constexpr int kTaskBundleSchemaVersion = 1;

struct TestCase {
    std::string name;
    std::string stdin_data;
    std::string expected_stdout;
    bool max_size_marker = false;
};

// One problem variant: prompt, hints, test suite, calibrated limits. Cases are
// numbered from 1 in verdicts and 0-based internally; the worked example (when
// the task family has one) is always case 0 so failures cite a checkable case.
struct TaskSpec {
    AlgorithmId algo = AlgorithmId::Dijkstra;
    int variant = 0;
    std::string statement;
    std::string hint_l1;
    std::string hint_l2;
    std::string scaffold;
    std::vector<TestCase> cases;
    double time_limit_s = 5.0;
    uint64_t mem_limit_bytes = 256ULL << 20;
    std::string complexity_bound;
    std::string compare_rule = "trim_trailing_ws";  // recorded once per spec
    std::string variant_notes;                      // which surface params differ
    int schema_version = kTaskBundleSchemaVersion;

    std::string id() const;  // e.g. "dijkstra-v3"

    // Enforces the structural invariants; throws MalformedInput on violation.
    void validate() const;
};

// One structured-text document per TaskSpec, line-delimited; test-case
// payloads are base64 for binary safety.
std::string task_spec_to_json(const TaskSpec& spec);
TaskSpec task_spec_from_json(const std::string& line);

void write_bundle(const std::filesystem::path& path, const std::vector<TaskSpec>& specs);
std::vector<TaskSpec> read_bundle(const std::filesystem::path& path);

}  // namespace arena
