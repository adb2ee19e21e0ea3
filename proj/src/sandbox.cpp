#include "arena/sandbox.hpp"

#include <dirent.h>
#include <fcntl.h>
#include <poll.h>
#include <sched.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "arena/errors.hpp"
#include "arena/util.hpp"

namespace arena {

namespace {

namespace fs = std::filesystem;

// Normal runs hold the lock shared; calibration takes it exclusively so that
// timing runs never race other guests on the same host.
std::shared_mutex& timing_lock() {
    static std::shared_mutex m;
    return m;
}

void ignore_sigpipe_once() {
    static std::once_flag flag;
    std::call_once(flag, [] { signal(SIGPIPE, SIG_IGN); });
}

std::vector<std::string> split_command(const std::string& cmd) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : cmd) {
        if (c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Pipe {
    int r = -1;
    int w = -1;
    Pipe() {
        int fds[2];
        if (pipe(fds) != 0) throw SandboxSetupError("pipe() failed");
        r = fds[0];
        w = fds[1];
    }
    ~Pipe() {
        if (r >= 0) close(r);
        if (w >= 0) close(w);
    }
    void close_r() {
        if (r >= 0) close(r);
        r = -1;
    }
    void close_w() {
        if (w >= 0) close(w);
        w = -1;
    }
};

void set_nonblocking(int fd) {
    fcntl(fd, F_SETFL, fcntl(fd, F_GETFL) | O_NONBLOCK);
}

// RAII scratch directory, one per execution.
struct ScratchDir {
    fs::path path;
    explicit ScratchDir(const std::string& root_hint) {
        fs::path root = root_hint.empty() ? fs::temp_directory_path() : fs::path(root_hint);
        std::error_code ec;
        fs::create_directories(root, ec);
        static std::atomic<uint64_t> counter{0};
        const uint64_t tag = counter.fetch_add(1);
        path = root / ("arena-" + std::to_string(getpid()) + "-" + std::to_string(tag));
        if (!fs::create_directories(path, ec) || ec) {
            throw SandboxSetupError("cannot create scratch directory " + path.string());
        }
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

bool read_pgid_of(pid_t pid, pid_t& pgid_out) {
    char buf[512];
    const std::string p = "/proc/" + std::to_string(pid) + "/stat";
    int fd = open(p.c_str(), O_RDONLY);
    if (fd < 0) return false;
    ssize_t n = read(fd, buf, sizeof(buf) - 1);
    close(fd);
    if (n <= 0) return false;
    buf[n] = 0;
    // "pid (comm) state ppid pgrp ..." and comm may contain spaces.
    const char* close_paren = strrchr(buf, ')');
    if (!close_paren) return false;
    int ppid = 0, pgrp = 0;
    char state = 0;
    if (sscanf(close_paren + 1, " %c %d %d", &state, &ppid, &pgrp) != 3) return false;
    if (state == 'Z') return false;  // zombies hold no resources
    pgid_out = pgrp;
    return true;
}

}  // namespace

int count_pgid_members(pid_t pgid) {
    DIR* dir = opendir("/proc");
    if (!dir) return 0;
    int found = 0;
    while (dirent* ent = readdir(dir)) {
        if (ent->d_name[0] < '0' || ent->d_name[0] > '9') continue;
        const pid_t pid = static_cast<pid_t>(atol(ent->d_name));
        pid_t other = 0;
        if (read_pgid_of(pid, other) && other == pgid) ++found;
    }
    closedir(dir);
    return found;
}

namespace {

void sweep_group(pid_t pgid, double grace_s) {
    const double deadline = monotonic_seconds() + std::max(grace_s, 0.2);
    while (count_pgid_members(pgid) > 0) {
        killpg(pgid, SIGKILL);
        if (monotonic_seconds() > deadline) break;
        usleep(5000);
    }
}

struct RawRun {
    std::string out;
    std::string err;
    double wall_s = 0;
    uint64_t peak_bytes = 0;
    bool timed_out = false;
    bool truncated_out = false;
    bool exec_failed = false;
    bool netns = false;
    int status = 0;
    pid_t pid = 0;
};

RawRun supervise(const std::vector<std::string>& argv, const std::string& stdin_data,
                 const SandboxLimits& limits, const SandboxConfig& cfg, const fs::path& cwd) {
    ignore_sigpipe_once();
    Pipe in, out, err, status_pipe;
    fcntl(status_pipe.w, F_SETFD, FD_CLOEXEC);

    std::vector<char*> cargv;
    for (const auto& a : argv) cargv.push_back(const_cast<char*>(a.c_str()));
    cargv.push_back(nullptr);

    const double t0 = monotonic_seconds();
    const pid_t pid = fork();
    if (pid < 0) throw SandboxSetupError("fork() failed");
    if (pid == 0) {
        setpgid(0, 0);
        char net_flag = unshare(CLONE_NEWNET) == 0 ? '1' : '0';
        (void)!write(status_pipe.w, &net_flag, 1);
        if (limits.mem_bytes > 0) {
            rlimit rl{limits.mem_bytes, limits.mem_bytes};
            setrlimit(RLIMIT_AS, &rl);
        }
        rlimit core{0, 0};
        setrlimit(RLIMIT_CORE, &core);
        const rlim_t cpu = static_cast<rlim_t>(std::ceil(limits.wall_time_s)) + 2;
        rlimit cpul{cpu, cpu + 1};
        setrlimit(RLIMIT_CPU, &cpul);
        if (chdir(cwd.c_str()) != 0) _exit(125);
        dup2(in.r, 0);
        dup2(out.w, 1);
        dup2(err.w, 2);
        in.close_w();
        out.close_r();
        err.close_r();
        execvp(cargv[0], cargv.data());
        const char fail = 'X';
        (void)!write(status_pipe.w, &fail, 1);
        _exit(127);
    }

    setpgid(pid, pid);  // also done in the child; whichever wins is fine
    in.close_r();
    out.close_w();
    err.close_w();
    status_pipe.close_w();
    set_nonblocking(in.w);
    set_nonblocking(out.r);
    set_nonblocking(err.r);

    RawRun run;
    run.pid = pid;
    size_t in_off = 0;
    if (stdin_data.empty()) in.close_w();
    bool child_exited = false;
    double exit_seen = 0;
    int wstatus = 0;
    rusage ru{};
    const double deadline = t0 + limits.wall_time_s;
    const double stream_grace = std::max(cfg.grace_s, 0.25);

    auto drain = [&](int fd, std::string& sink, uint64_t cap, bool& truncated) -> bool {
        char buf[65536];
        for (;;) {
            const ssize_t n = read(fd, buf, sizeof(buf));
            if (n > 0) {
                if (sink.size() < cap) {
                    const size_t take = std::min(static_cast<size_t>(n), cap - sink.size());
                    sink.append(buf, take);
                    if (take < static_cast<size_t>(n)) truncated = true;
                } else {
                    truncated = true;
                }
                continue;
            }
            if (n == 0) return false;  // EOF
            return errno == EAGAIN || errno == EWOULDBLOCK || errno == EINTR;
        }
    };

    bool out_open = true, err_open = true;
    bool dummy_trunc = false;
    while (true) {
        if (!child_exited) {
            const pid_t w = wait4(pid, &wstatus, WNOHANG, &ru);
            if (w == pid) {
                child_exited = true;
                exit_seen = monotonic_seconds();
            }
        }
        const double now = monotonic_seconds();
        if (!child_exited && now >= deadline) {
            run.timed_out = true;
            killpg(pid, SIGKILL);
            kill(pid, SIGKILL);
        }
        pollfd fds[3];
        nfds_t nf = 0;
        int idx_in = -1, idx_out = -1, idx_err = -1;
        if (in.w >= 0 && in_off < stdin_data.size()) {
            idx_in = static_cast<int>(nf);
            fds[nf++] = {in.w, POLLOUT, 0};
        }
        if (out_open) {
            idx_out = static_cast<int>(nf);
            fds[nf++] = {out.r, POLLIN, 0};
        }
        if (err_open) {
            idx_err = static_cast<int>(nf);
            fds[nf++] = {err.r, POLLIN, 0};
        }
        if (nf == 0 && child_exited) break;
        const int timeout_ms = child_exited ? 20 : 25;
        poll(fds, nf, timeout_ms);
        if (idx_out >= 0 && (fds[idx_out].revents & (POLLIN | POLLHUP | POLLERR))) {
            if (!drain(out.r, run.out, cfg.stdout_cap_bytes, run.truncated_out)) {
                out_open = false;
                out.close_r();
            }
        }
        if (idx_err >= 0 && (fds[idx_err].revents & (POLLIN | POLLHUP | POLLERR))) {
            if (!drain(err.r, run.err, cfg.stderr_cap_bytes, dummy_trunc)) {
                err_open = false;
                err.close_r();
            }
        }
        if (idx_in >= 0 && (fds[idx_in].revents & (POLLOUT | POLLHUP | POLLERR))) {
            const ssize_t n =
                write(in.w, stdin_data.data() + in_off, stdin_data.size() - in_off);
            if (n > 0) {
                in_off += static_cast<size_t>(n);
            } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
                in_off = stdin_data.size();  // guest closed stdin; stop feeding
            }
            if (in_off >= stdin_data.size()) in.close_w();
        }
        if (child_exited && !out_open && !err_open) break;
        // Grandchildren can outlive the child while holding the pipe ends;
        // give streams a short grace after exit, then let the sweep handle them.
        if (child_exited && monotonic_seconds() > exit_seen + stream_grace) break;
    }

    if (!child_exited) wait4(pid, &wstatus, 0, &ru);
    // Final nonblocking drain for anything buffered at exit.
    if (out_open) drain(out.r, run.out, cfg.stdout_cap_bytes, run.truncated_out);
    if (err_open) drain(err.r, run.err, cfg.stderr_cap_bytes, dummy_trunc);
    run.wall_s = monotonic_seconds() - t0;
    run.status = wstatus;
    run.peak_bytes = static_cast<uint64_t>(ru.ru_maxrss) * 1024;

    char flags[8];
    const ssize_t fn = read(status_pipe.r, flags, sizeof(flags));
    for (ssize_t i = 0; i < fn; ++i) {
        if (flags[i] == '1') run.netns = true;
        if (flags[i] == 'X') run.exec_failed = true;
    }

    sweep_group(pid, cfg.grace_s);
    return run;
}

}  // namespace

Sandbox::Sandbox(SandboxConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.runtime_cmd.empty()) {
        throw SandboxSetupError("sandbox requires a configured guest runtime command");
    }
}

ExecResult Sandbox::run_snippet(const std::string& guest_code, const std::string& stdin_data,
                                const SandboxLimits& limits, bool exclusive) const {
    if (limits.wall_time_s <= 0 || limits.mem_bytes == 0) {
        throw SandboxSetupError("sandbox limits must be positive");
    }
    std::shared_lock<std::shared_mutex> shared(timing_lock(), std::defer_lock);
    std::unique_lock<std::shared_mutex> unique(timing_lock(), std::defer_lock);
    if (exclusive) {
        unique.lock();
    } else {
        shared.lock();
    }

    ScratchDir scratch(cfg_.scratch_root);
    const fs::path script = scratch.path / "guest_script.py";
    write_file(script, guest_code);

    auto argv = split_command(cfg_.runtime_cmd);
    if (argv.empty()) throw SandboxSetupError("empty guest runtime command");
    argv.push_back(script.string());

    RawRun raw = supervise(argv, stdin_data, limits, cfg_, scratch.path);
    if (raw.exec_failed) {
        throw SandboxSetupError("guest runtime not executable: " + cfg_.runtime_cmd);
    }

    ExecResult res;
    res.stdout_data = std::move(raw.out);
    res.stderr_data = std::move(raw.err);
    res.wall_time_s = raw.wall_s;
    res.peak_mem_bytes = raw.peak_bytes;
    res.stdout_truncated = raw.truncated_out;
    res.pgid = raw.pid;
    res.mem_mechanism = std::string("rlimit_as") + (raw.netns ? "+netns" : "");

    if (raw.timed_out) {
        res.exit = ExitKind::TimedOut;
        res.exit_code = -1;
        return res;
    }
    if (WIFSIGNALED(raw.status)) {
        const int sig = WTERMSIG(raw.status);
        res.exit_code = 128 + sig;
        if (sig == SIGXCPU) {
            res.exit = ExitKind::TimedOut;
        } else if (sig == SIGKILL && limits.mem_bytes > 0 &&
                   res.peak_mem_bytes >= limits.mem_bytes - (limits.mem_bytes / 5)) {
            res.exit = ExitKind::MemoryKilled;
        } else {
            res.exit = ExitKind::Crashed;
        }
        return res;
    }
    const int code = WEXITSTATUS(raw.status);
    res.exit_code = code;
    if (code == 0) {
        res.exit = ExitKind::Completed;
    } else if (res.stderr_data.find("MemoryError") != std::string::npos ||
               res.stderr_data.find("bad_alloc") != std::string::npos ||
               res.stderr_data.find("Cannot allocate memory") != std::string::npos) {
        res.exit = ExitKind::MemoryKilled;
    } else {
        res.exit = ExitKind::Crashed;
    }
    return res;
}

std::string splice_scaffold(const std::string& scaffold, const std::string& guest_code) {
    const std::string marker = "YOUR CODE IS HERE";
    const size_t at = scaffold.find(marker);
    if (at == std::string::npos) {
        throw SandboxSetupError("scaffold has no submission slot");
    }
    const std::string quote = "'''";
    const size_t open = scaffold.rfind(quote, at);
    const size_t close = scaffold.find(quote, at);
    if (open == std::string::npos || close == std::string::npos) {
        throw SandboxSetupError("scaffold submission slot is not quoted");
    }
    return scaffold.substr(0, open) + guest_code + scaffold.substr(close + quote.size());
}

Verdict Sandbox::run_submission(const std::string& guest_code, const TaskSpec& spec,
                                bool exclusive) const {
    const std::string script = splice_scaffold(spec.scaffold, guest_code);
    const SandboxLimits limits{spec.time_limit_s, spec.mem_limit_bytes};
    double max_time = 0;
    int case_no = 0;
    for (const TestCase& tc : spec.cases) {
        ++case_no;
        const ExecResult res = run_snippet(script, tc.stdin_data, limits, exclusive);
        switch (res.exit) {
            case ExitKind::TimedOut:
                return make_timeout(case_no, spec.time_limit_s);
            case ExitKind::MemoryKilled:
                return make_memory_exceeded(case_no);
            case ExitKind::Crashed: {
                std::string detail = "exit code " + std::to_string(res.exit_code);
                const auto lines = split_lines(res.stderr_data);
                for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
                    if (!rstrip(*it).empty()) {
                        detail += ": " + rstrip(*it);
                        break;
                    }
                }
                return make_runtime_error(case_no, detail);
            }
            case ExitKind::Completed:
                break;
        }
        if (normalize_output(res.stdout_data) != normalize_output(tc.expected_stdout)) {
            return make_wrong_answer(case_no);
        }
        max_time = std::max(max_time, res.wall_time_s);
    }
    return make_accepted(static_cast<int>(spec.cases.size()), max_time);
}

}  // namespace arena
