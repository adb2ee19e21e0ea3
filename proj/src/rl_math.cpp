#include "arena/rl_math.hpp"

#include <cmath>
#include <numeric>

#include "arena/errors.hpp"

namespace arena {

std::vector<double> group_advantages(const std::vector<double>& rewards, double std_floor) {
    if (rewards.empty()) throw EmptyInput("group_advantages: empty reward list");
    const double n = static_cast<double>(rewards.size());
    const double mean = std::accumulate(rewards.begin(), rewards.end(), 0.0) / n;
    double var = 0;
    for (double r : rewards) var += (r - mean) * (r - mean);
    var /= n;  // population variance
    const double denom = std::max(std::sqrt(var), std_floor);
    std::vector<double> out;
    out.reserve(rewards.size());
    for (double r : rewards) out.push_back((r - mean) / denom);
    return out;
}

double clipped_surrogate(double ratio, double advantage, double epsilon) {
    if (ratio <= 0) throw ArenaError("clipped_surrogate: ratio must be positive");
    const double clipped = std::clamp(ratio, 1.0 - epsilon, 1.0 + epsilon);
    return std::min(ratio * advantage, clipped * advantage);
}

double kl_penalty(const std::vector<double>& logp_theta, const std::vector<double>& logp_ref) {
    if (logp_theta.size() != logp_ref.size()) {
        throw ShapeMismatch("kl_penalty: token length mismatch");
    }
    if (logp_theta.empty()) return 0;
    double total = 0;
    for (size_t i = 0; i < logp_theta.size(); ++i) {
        const double d = logp_ref[i] - logp_theta[i];
        total += std::exp(d) - d - 1.0;
    }
    return total / static_cast<double>(logp_theta.size());
}

double forget_objective(const GroupBatch& batch, const GrpoConfig& cfg) {
    const size_t g = batch.rewards.size();
    if (g == 0) throw EmptyInput("forget_objective: empty group");
    if (batch.logp_theta.size() != g || batch.logp_ref.size() != g) {
        throw ShapeMismatch("forget_objective: group size mismatch");
    }
    const std::vector<std::vector<double>>* denom = &batch.logp_ref;
    if (cfg.denominator == RatioDenominator::Old) {
        if (!batch.logp_old) throw ShapeMismatch("forget_objective: logp_old required");
        if (batch.logp_old->size() != g) {
            throw ShapeMismatch("forget_objective: logp_old group size mismatch");
        }
        denom = &*batch.logp_old;
    }
    const std::vector<double> advantages = group_advantages(batch.rewards, cfg.std_floor);
    double total = 0;
    for (size_t j = 0; j < g; ++j) {
        const auto& lt = batch.logp_theta[j];
        const auto& ld = (*denom)[j];
        if (lt.size() != ld.size() || lt.size() != batch.logp_ref[j].size()) {
            throw ShapeMismatch("forget_objective: token length mismatch in response " +
                                std::to_string(j));
        }
        const double sum_t = std::accumulate(lt.begin(), lt.end(), 0.0);
        const double sum_d = std::accumulate(ld.begin(), ld.end(), 0.0);
        const double ratio = std::exp(sum_t - sum_d);  // sequence-level ratio
        const double j_clip = clipped_surrogate(ratio, advantages[j], cfg.epsilon);
        const double kl = kl_penalty(lt, batch.logp_ref[j]);
        total += j_clip - cfg.beta * kl;
    }
    return -total / static_cast<double>(g);
}

double unlearn_objective(double forget_value, double retain_value, double lambda_retain) {
    return forget_value + lambda_retain * retain_value;
}

double ttrl_reward(const Verdict& verdict) {
    if (!verdict.accepted()) return 0;
    if (verdict.max_time_s <= 0) {
        throw NonpositiveTime("ttrl_reward: accepted verdict with non-positive time");
    }
    return 1.0 / verdict.max_time_s;
}

std::vector<double> calibrated_advantages(const std::vector<double>& rewards, double std_floor) {
    if (rewards.empty()) throw EmptyInput("calibrated_advantages: empty reward list");
    bool any_positive = false;
    for (double r : rewards) any_positive |= r > 0;
    if (any_positive) return group_advantages(rewards, std_floor);
    // Virtual maximum-reward sample keeps the gradient signal alive when the
    // whole group scored zero.
    std::vector<double> extended = rewards;
    extended.push_back(1.0);
    std::vector<double> adv = group_advantages(extended, std_floor);
    adv.resize(rewards.size());
    return adv;
}

}  // namespace arena
