#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oblr {

// Finite synthetic environment: a query distribution, one finite output set
// per query (possibly ragged), and a bounded reward table.
struct TaskSpec {
    std::vector<double> query_probs;          // >= 0, sums to 1 within 1e-12
    std::vector<std::vector<double>> rewards; // rewards[q][o], |rewards[q][o]| <= reward_bound
    double reward_bound = 0.0;

    int num_queries() const { return static_cast<int>(query_probs.size()); }
    int num_outputs(int q) const { return static_cast<int>(rewards[static_cast<std::size_t>(q)].size()); }

    // Flattened parameter dimension d = sum_q |O_q|.
    int dim() const;
    // Offset of query q's block in a flattened d-vector.
    int offset(int q) const;

    void validate() const;
};

TaskSpec make_random_task(int num_queries, int num_outputs, double reward_bound, std::uint64_t seed);

TaskSpec make_table_task(std::vector<double> query_probs, std::vector<std::vector<double>> rewards);

// sup_theta J(theta) = sum_q p(q) max_o F(q,o). The supremum is not attained
// by any finite softmax policy, so the loss J* - J(theta) stays positive.
double optimal_value(const TaskSpec& task);

std::string task_to_json(const TaskSpec& task);
TaskSpec task_from_json(const std::string& text);

} // namespace oblr
