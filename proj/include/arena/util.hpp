#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arena {

// Deterministic, platform-independent PRNG. std::uniform_int_distribution is
// implementation-defined, so all seeded generation goes through this.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next();

    // Uniform in [0, bound), bound > 0. Rejection sampling, unbiased.
    uint64_t below(uint64_t bound);

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi);

    double real01();

    // Derive an independent stream from (seed, salt...) without touching state.
    static uint64_t derive(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0);

private:
    uint64_t state_;
};

uint64_t fnv1a64(std::string_view data);

std::string base64_encode(std::string_view data);
std::string base64_decode(std::string_view data);

std::string sha256_hex(std::string_view data);

std::string to_lower(std::string_view s);
bool contains_ci(std::string_view haystack, std::string_view needle);

// Word-boundary-aware case-insensitive search; "gray" must not fire on "grayscale".
bool contains_word_ci(std::string_view haystack, std::string_view word);

std::vector<std::string> split_lines(std::string_view text);
std::string rstrip(std::string_view s);

// Grading comparison rule: per-line trailing whitespace and trailing blank
// lines are ignored; everything else is byte-exact.
std::string normalize_output(std::string_view s);

// "5" -> "5.0", "0.5" -> "0.5", "4.23" -> "4.23"; used by verdict rendering.
std::string format_seconds(double s);
std::string format_seconds3(double s);  // always three decimals, e.g. "0.284"

// Local token estimator used when the provider reports no usage and for the
// pre-flight context budget check: ceil(bytes / 4).
uint64_t estimate_tokens(std::string_view text);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view data);

double monotonic_seconds();

std::optional<std::string> env_var(const std::string& name);

// Repository data directory: $ARENA_DATA_DIR if set, else the source tree.
std::filesystem::path data_dir();

std::string json_escape(std::string_view s);

}  // namespace arena
