#pragma once

#include <functional>

#include "oblr/estimators.hpp"
#include "oblr/policy.hpp"
#include "oblr/task.hpp"

namespace oblr {

// Visit every possible batch outcome (N query draws x G output draws) with its
// probability under (task, params). Probabilities sum to 1; the visitation
// order is fixed, so reductions are deterministic.
void for_each_batch(const TaskSpec& task, const PolicyParams& params, int n, int g,
                    const std::function<void(const SampleBatch&, double prob)>& visit);

// Total number of distinct batch outcomes, for feasibility checks.
double count_batch_outcomes(const TaskSpec& task, int n, int g);

// Exact E[g_hat] of estimate_gradient over all batch outcomes.
std::vector<double> expected_gradient_enumerated(const TaskSpec& task, const PolicyParams& params,
                                                 const AdvantageMethod& method, int n, int g);

// Exact tr Var[g_hat] of the fixed-baseline estimator score * (F - b) over all
// batch outcomes; the literal object of the variance decomposition.
double estimator_variance_trace_enumerated(const TaskSpec& task, const PolicyParams& params,
                                           const std::vector<double>& baseline, int n, int g);

} // namespace oblr
