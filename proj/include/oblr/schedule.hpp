#pragma once

#include <string>
#include <vector>

#include "oblr/policy.hpp"

namespace oblr {

enum class LrMode { Fixed, AdaptiveExact, AdaptiveEmpirical };
enum class SnrBasis { RawReward, Advantage };

struct LrPolicy {
    LrMode mode = LrMode::AdaptiveEmpirical;
    double eta0 = 0.01;
    SnrBasis snr_basis = SnrBasis::RawReward;
    bool debias_signal = false;

    void validate() const;
};

LrMode lr_mode_from_name(const std::string& name);
std::string lr_mode_name(LrMode mode);
SnrBasis snr_basis_from_name(const std::string& name);
std::string snr_basis_name(SnrBasis basis);

// eta = (1/(BL+B^2M)) * N*SNR / (1 + N*SNR) with SNR = grad_sq / tr_H.
// tr_H = 0 with a positive signal is the SNR -> inf limit (maximal rate);
// grad_sq = 0 gives 0.
double optimal_lr_exact(double grad_sq, double tr_h, int n, double B, double L, double M);

// Sample SNR ||mu_hat||^2 / sigma_hat^2 from per-sample vectors score*F
// (RawReward) or score*(r - group mean) (Advantage). sigma_hat^2 uses the
// NG-1 divisor; near-zero deviation returns +inf. With debias the signal is
// max(0, ||mu_hat||^2 - sigma_hat^2/NG).
double empirical_snr(const SampleBatch& batch, SnrBasis basis, bool debias);

// eta0 * N*snr / (1 + N*snr); maps +inf to eta0 and 0 to 0. Monotone in both.
double adaptive_lr(double snr, int n, double eta0);

struct AllocationPlan {
    std::vector<long long> counts;        // per-step query counts, sum == budget, each >= 1
    std::vector<double> counts_continuous; // water-filled continuous optimum
    long long budget = 0;
    bool clamped = false;
    // max - min over steps of sqrt(trH_t) / (N_t + trH_t/grad_sq_t) at the
    // continuous solution; zero (to fp error) on unclamped instances.
    double certificate_residual = 0.0;
};

// Budget-constrained query allocation: water-fill the closed form
// N_t = lambda * sqrt(trH_t) - trH_t/grad_sq_t with lambda chosen to spend the
// budget, clamping at 1 and re-solving on the rest, then largest-remainder
// rounding so the counts sum to the budget exactly.
AllocationPlan allocate_budget(const std::vector<double>& tr_h, const std::vector<double>& grad_sq, long long budget);

// The allocator's objective sum_t trH_t / (N_t + trH_t/grad_sq_t).
double allocation_objective(const std::vector<double>& tr_h, const std::vector<double>& grad_sq,
                            const std::vector<double>& counts);

} // namespace oblr
