#pragma once

#include <string>
#include <vector>

#include "oblr/rng.hpp"
#include "oblr/task.hpp"

namespace oblr {

// Tabular softmax policy: one logit per (query, output), no sharing.
struct PolicyParams {
    std::vector<std::vector<double>> logits; // shape mirrors TaskSpec::rewards

    int num_queries() const { return static_cast<int>(logits.size()); }
    int num_outputs(int q) const { return static_cast<int>(logits[static_cast<std::size_t>(q)].size()); }
    int dim() const;
    int offset(int q) const;
};

// All-zero logits matching the task shape (uniform policy).
PolicyParams zero_params(const TaskSpec& task);

void check_shape(const PolicyParams& params, const TaskSpec& task);

// One draw: output o for query q, its reward, and the full d-length score
// vector e_(q,o) - pi(.|q) embedded in query q's block.
struct Sample {
    int query = 0;
    int output = 0;
    double reward = 0.0;
    std::vector<double> score;
};

// N groups of G outputs each; group j occupies entries [j*G, (j+1)*G).
struct SampleBatch {
    int num_queries = 0; // N
    int group_size = 0;  // G
    std::vector<Sample> entries;

    int total() const { return num_queries * group_size; }
    const Sample& at(int group, int slot) const {
        return entries[static_cast<std::size_t>(group * group_size + slot)];
    }
};

// log pi(o|q) = theta(q,o) - logsumexp_o' theta(q,o'), max-stabilized.
double log_prob(const PolicyParams& params, int q, int o);

// Softmax probabilities over query q's outputs.
std::vector<double> softmax_probs(const PolicyParams& params, int q);

// Full d-length score vector: (1 - pi(o|q)) at (q,o), -pi(o'|q) elsewhere in
// the block, zero outside it.
std::vector<double> score(const PolicyParams& params, int q, int o);

// ||score(q,o)||^2 = (1 - pi_o)^2 + sum_{o' != o} pi_{o'}^2, always <= 2.
double score_sq_norm(const std::vector<double>& probs, int o);

// Draw N queries from the task distribution, each with G i.i.d. outputs from
// pi(.|q). Slot 0 of each group's stream picks the query; slots 1..G pick outputs.
SampleBatch sample_batch(const PolicyParams& params, const TaskSpec& task, int n, int g, const RngStream& rng);

// E_{q~D}[H(pi(.|q))], exact sum.
double entropy(const PolicyParams& params, const TaskSpec& task);

// E_{q~D}[KL(pi_params(.|q) || pi_ref(.|q))], exact sum.
double kl_to(const PolicyParams& params, const PolicyParams& ref, const TaskSpec& task);

std::string params_to_json(const PolicyParams& params);
PolicyParams params_from_json(const std::string& text);

// Flatten/unflatten between the ragged logit table and d-vectors.
std::vector<double> flatten(const PolicyParams& params);
PolicyParams unflatten(const TaskSpec& task, const std::vector<double>& flat);

} // namespace oblr
