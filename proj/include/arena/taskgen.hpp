#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "arena/sandbox.hpp"
#include "arena/task_spec.hpp"

namespace arena {

// Builds `count` problem variants that share the algorithm's complexity bound
// but differ in surface parameters (value ranges, narrative framing), without
// test cases. Deterministic in seed.
std::vector<TaskSpec> generate_variants(AlgorithmId algo, int count, uint64_t seed);

// Generates the spec's test suite: the worked example as case 0 where the task
// family has one, small random cases, and at least one case at the maximum
// generated size. Expected outputs come from solve_reference; a down-sampled
// twin of the max-size case is cross-checked against solve_naive and a
// disagreement aborts generation.
std::vector<TestCase> generate_cases(const TaskSpec& spec, uint64_t seed);

// Variants + cases + validation + post-generation re-verification.
std::vector<TaskSpec> generate_bundle(AlgorithmId algo, int count, uint64_t seed);

struct CalibrationSettings {
    double safety_factor = 3.0;
    double mem_factor = 4.0;
    uint64_t min_mem_bytes = 256ULL << 20;
    int trials = 3;
    double provisional_time_s = 60.0;  // limit while measuring the reference
};

struct CalibrationRow {
    std::string spec_id;
    double median_ref_s = 0;
    double tau_s = 0;
    double headroom = 0;  // tau / median reference time on the max-size case
    double ref_all_cases_max_s = 0;
    uint64_t peak_mem_bytes = 0;
    uint64_t mu_bytes = 0;
    std::string foil_outcome;  // verdict kind observed for the foil at tau
    bool sound = false;
};

struct CalibrationReport {
    std::vector<CalibrationRow> rows;
    bool all_sound() const;
    std::string to_text() const;
    std::string to_json() const;
};

// Measures the reference guest on the max-size case over `trials` serialized
// runs, sets tau = safety_factor * median and mu = mem_factor * peak (floored),
// verifies the reference passes every case under the new limits, and asserts
// the foil times out on the max-size case. Updates the spec's limits in place.
// Throws CalibrationInversion when the foil beats the limit and
// OracleDisagreement when the foil completes with a wrong answer.
CalibrationRow calibrate_limits(TaskSpec& spec, const Sandbox& sandbox,
                                const CalibrationSettings& settings);

CalibrationReport calibrate_bundle(std::vector<TaskSpec>& specs, const Sandbox& sandbox,
                                   const CalibrationSettings& settings);

}  // namespace arena
