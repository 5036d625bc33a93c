#pragma once

#include <string>
#include <vector>

#include "oblr/policy.hpp"
#include "oblr/task.hpp"

namespace oblr {

enum class AdvKind {
    MeanBaseline, // subtract the exact per-query expected reward
    Grpo,         // group-standardized rewards (population std)
    Rloo,         // leave-one-out mean baseline
    ReMax,        // greedy-rollout reward baseline
    Oblr,         // gradient-weighted leave-one-out baseline
};

struct AdvantageMethod {
    AdvKind kind = AdvKind::Oblr;
    double grpo_std_threshold = 1e-12; // below this the group is degenerate: zero advantages
    double oblr_weight_floor = 1e-12;  // below this the weighted mean falls back to the LOO mean

    // Smallest group size the estimator accepts.
    int min_group_size() const;
    void require_group_size(int g) const;
};

AdvantageMethod method_from_name(const std::string& name);
std::string method_name(const AdvantageMethod& method);

// (r_i - mean) / std with population (divide-by-G) std; degenerate groups get zeros.
std::vector<double> advantages_grpo(const std::vector<double>& rewards);

// A_i = r_i - mean of the other G-1 rewards.
std::vector<double> advantages_rloo(const std::vector<double>& rewards);

// A_i = r_i - reward of the argmax-probability output (tie: lowest index).
std::vector<double> advantages_remax(const std::vector<double>& rewards, double greedy_reward);

// A_i = r_i - weighted LOO mean with weights ||score_j||^2; near-zero total
// weight falls back to the unweighted LOO mean.
std::vector<double> advantages_oblr(const std::vector<double>& rewards, const std::vector<double>& score_sq_norms);

struct GradientEstimate {
    std::vector<double> g;                             // arithmetic mean of per_sample_terms
    std::vector<std::vector<double>> per_sample_terms; // N*G vectors score * advantage
    std::vector<double> advantages;                    // per sample, batch order
    int batch_n = 0;
    int batch_g = 0;
};

// g_hat = (1/NG) sum_j sum_i score(q_j, o_ij) * A(q_j, o_ij), advantages per group.
GradientEstimate estimate_gradient(const SampleBatch& batch, const AdvantageMethod& method, const TaskSpec& task,
                                   const PolicyParams& params);

// The Assumption-1 baseline each method idealizes, per query: the exact
// expected reward for MeanBaseline/RLOO (and GRPO, as its proxy), the greedy
// output's reward for ReMax, and the gradient-weighted optimum for OBLR.
std::vector<double> ideal_baseline(const AdvantageMethod& method, const TaskSpec& task, const PolicyParams& params);

namespace detail {
// GRPO with the population std shifted by `std_shift`; the invariant suite
// uses a nonzero shift as its seeded-fault self-test.
std::vector<double> advantages_grpo_shifted(const std::vector<double>& rewards, double std_shift,
                                            double degenerate_threshold);
} // namespace detail

} // namespace oblr
