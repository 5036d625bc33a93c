#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oblr/estimators.hpp"
#include "oblr/oracle.hpp"
#include "oblr/policy.hpp"
#include "oblr/schedule.hpp"
#include "oblr/task.hpp"

namespace oblr {

struct Diagnostics {
    int exact_stats_every = 10;
    MatrixMode matrix_mode = MatrixMode::Auto;
};

struct RunConfig {
    TaskSpec task;
    AdvantageMethod algorithm;
    LrPolicy lr;
    int steps = 200;
    int queries_per_step = 4; // N
    int group_size = 4;       // G
    std::uint64_t seed = 0;
    Diagnostics diagnostics;

    void validate() const;
};

struct MetricsRow {
    int step = 0;
    double eta = 0.0;
    double loss = 0.0;            // exact L(theta_t), pre-update
    double grad_norm_exact = 0.0; // ||grad J(theta_t)||
    double grad_norm_emp = 0.0;   // ||g_hat||
    double adv_mean = 0.0;
    double adv_abs_mean = 0.0;
    double snr_emp = 0.0;
    std::optional<double> snr_exact; // diagnostic steps only
    std::optional<double> tr_H;      // diagnostic steps only
    double entropy = 0.0;
    double kl = 0.0; // KL to the initial (uniform) policy
};

struct RunRecord {
    std::vector<MetricsRow> rows; // exactly config.steps rows
    RunConfig config;
    BoundConstants consts;
    PolicyParams final_params;
    double initial_loss = 0.0;
    double final_loss = 0.0; // exact loss at theta_T, post final update
    // theta_t for t = 0..T, flattened; kept at desk scale so the descent bound
    // can be re-verified along the trajectory.
    std::vector<std::vector<double>> trajectory;
};

// One Algorithm-1 update: sample a batch, pick eta per the LrPolicy, compute
// advantages and the gradient estimate, ascend.
struct StepResult {
    PolicyParams params;
    MetricsRow row;
};
StepResult step(const PolicyParams& params, const TaskSpec& task, const RunConfig& config, int t,
                const PolicyParams& initial_params);

// Full run from theta_0 = 0; deterministic for a fixed seed.
RunRecord run(const RunConfig& config);

// Per-step check of E[L(theta_{t+1})] <= L - eta ||grad L||^2
//   + (kappa/2) eta^2 (||grad L||^2 + trH/N),
// with the expectation enumerated exactly when N*G <= 6 and estimated by
// Monte Carlo (99% CI) otherwise. Also reports the Theorem-4.5 decrement
// check at the per-step optimal rate.
struct DescentStepReport {
    int step = 0;
    double lhs = 0.0; // E[L(theta_{t+1})], exact or MC mean
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    bool exact = false;  // enumeration vs Monte Carlo
    bool violated = false;
    bool quadratic_dominates = false; // the eta^2 term exceeds the linear gain
    // Theorem 4.5: realized expected decrease vs the guaranteed decrement at
    // the optimal exact rate. Only meaningful when eta_t is that rate.
    double expected_decrease = 0.0;
    double guaranteed_decrement = 0.0;
    bool decrement_violated = false;
};

struct DescentReport {
    std::vector<DescentStepReport> steps;
    int violations = 0;
    int decrement_violations = 0;
};

DescentReport verify_descent_bound(const RunRecord& record, const BoundConstants& consts, int mc_replicates = 10000);

// Persistence: metrics.csv columns
//   step,eta,loss,grad_norm_exact,grad_norm_emp,adv_mean,adv_abs_mean,
//   snr_emp,snr_exact,tr_H,entropy,kl
// with empty snr_exact/tr_H cells on non-diagnostic steps, plus a run.json
// sidecar with config echo, seed, constants, and final params.
std::string metrics_csv(const RunRecord& record);
std::string run_json(const RunRecord& record);
void write_run_outputs(const RunRecord& record, const std::string& out_dir);

// Deterministic shortest round-trip formatting for doubles ("inf"/"-inf"/"nan"
// spelled out); the byte-identical rerun contract rests on it.
std::string format_double(double v);

} // namespace oblr
