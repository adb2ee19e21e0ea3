#pragma once

#include <sys/types.h>

#include <cstdint>
#include <string>

#include "arena/task_spec.hpp"
#include "arena/verdict.hpp"

namespace arena {

enum class ExitKind {
    Completed,
    TimedOut,
    MemoryKilled,
    Crashed,
};

struct ExecResult {
    std::string stdout_data;
    std::string stderr_data;
    double wall_time_s = 0;
    uint64_t peak_mem_bytes = 0;
    ExitKind exit = ExitKind::Completed;
    int exit_code = 0;  // Crashed: exit status, or 128+signal
    bool stdout_truncated = false;
    std::string mem_mechanism;  // enforcement actually applied, e.g. "rlimit_as+netns"
    pid_t pgid = 0;             // process group the guest ran in (already reaped)
};

struct SandboxLimits {
    double wall_time_s = 5.0;
    uint64_t mem_bytes = 256ULL << 20;
};

struct SandboxConfig {
    // Guest runtime command template "{runtime} {script_path}"; the runtime is
    // injected via configuration, never hard-coded here.
    std::string runtime_cmd;
    double grace_s = 0.5;
    uint64_t stdout_cap_bytes = 1ULL << 20;  // guard against output bombs
    uint64_t stderr_cap_bytes = 256ULL << 10;
    std::string scratch_root;  // empty: system temp dir
};

// Executes untrusted guest code under hard wall-clock and memory limits. Each
// execution runs in a fresh scratch directory with its own process group
// (killed on teardown) and, where the kernel permits, a private network
// namespace. The object is stateless apart from configuration and safe to
// share across threads; exclusive mode serializes timing-sensitive runs.
class Sandbox {
public:
    explicit Sandbox(SandboxConfig cfg);

    // Raw execution without grading; powers the model's run-code tool.
    ExecResult run_snippet(const std::string& guest_code, const std::string& stdin_data,
                           const SandboxLimits& limits, bool exclusive = false) const;

    // Splices guest_code into spec.scaffold, runs the cases in order, and
    // short-circuits on the first failure with its 1-based case number.
    Verdict run_submission(const std::string& guest_code, const TaskSpec& spec,
                           bool exclusive = false) const;

    const SandboxConfig& config() const { return cfg_; }

private:
    SandboxConfig cfg_;
};

// Splice the submitted solve function into the scaffold's marked slot.
// Throws SandboxSetupError when the scaffold has no slot.
std::string splice_scaffold(const std::string& scaffold, const std::string& guest_code);

// Number of live processes still in the given process group; used by the
// post-run orphan sweep and its tests.
int count_pgid_members(pid_t pgid);

}  // namespace arena
