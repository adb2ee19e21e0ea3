#pragma once

#include <optional>
#include <vector>

#include "arena/verdict.hpp"

namespace arena {

// Which policy sits in the importance-ratio denominator. The default follows
// the objective's written form (reference policy); Old supports the variant
// that keeps a separate behaviour policy.
enum class RatioDenominator { Reference, Old };

// G sampled responses to one query: rewards plus per-token log-probabilities
// under the current and reference policies (and optionally the old policy).
struct GroupBatch {
    std::vector<double> rewards;
    std::vector<std::vector<double>> logp_theta;
    std::vector<std::vector<double>> logp_ref;
    std::optional<std::vector<std::vector<double>>> logp_old;
};

struct GrpoConfig {
    double beta = 0.001;          // KL coefficient
    double epsilon = 0.2;         // clip range
    double lambda_retain = 1.0;   // retain-term coefficient
    double std_floor = 1e-6;
    RatioDenominator denominator = RatioDenominator::Reference;
};

// Mean/population-std normalized advantages; all-equal rewards give all
// zeros (the std floor prevents division blowups).
std::vector<double> group_advantages(const std::vector<double>& rewards, double std_floor = 1e-6);

// min(ratio * A, clip(ratio, 1-eps, 1+eps) * A)
double clipped_surrogate(double ratio, double advantage, double epsilon);

// Nonnegative estimator: mean over tokens of exp(lr-lt) - (lr-lt) - 1.
// Zero iff the two sequences are identical.
double kl_penalty(const std::vector<double>& logp_theta, const std::vector<double>& logp_ref);

// -(1/G) * sum_j [ J_clip_j - beta * KL_j ] with sequence-level importance
// ratios exp(sum logp_theta - sum logp_denom) and group-relative advantages.
double forget_objective(const GroupBatch& batch, const GrpoConfig& cfg);

// forget + lambda * retain
double unlearn_objective(double forget_value, double retain_value, double lambda_retain);

// Test-time reward: 1/T for an accepted solution of running time T, zero for
// any failure. T <= 0 on an accepted verdict is a measurement bug.
double ttrl_reward(const Verdict& verdict);

// group_advantages, except an all-zero reward group is extended with one
// virtual maximum-reward sample so the original G advantages come back
// strictly negative instead of vanishing.
std::vector<double> calibrated_advantages(const std::vector<double>& rewards,
                                          double std_floor = 1e-6);

}  // namespace arena
