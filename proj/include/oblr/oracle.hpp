#pragma once

#include <optional>
#include <vector>

#include "oblr/policy.hpp"
#include "oblr/task.hpp"

namespace oblr {

// Dense symmetric matrix, row-major. Materialized only for small d.
struct Matrix {
    int n = 0;
    std::vector<double> a;

    explicit Matrix(int dim = 0) : n(dim), a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
    double trace() const;
};

enum class MatrixMode { Auto, Full, TraceOnly };

// Everything the theory consumes, computed by exact enumeration over the
// finite task. H is the single-sample covariance of score * (F - b); C is the
// covariance between two i.i.d. same-query samples.
struct ExactStats {
    std::vector<double> grad_J; // exact gradient of J at theta
    double value = 0.0;         // J(theta)
    double loss = 0.0;          // J(theta*) - J(theta)
    std::optional<Matrix> H;
    std::optional<Matrix> C;
    double tr_H = 0.0;
    double tr_C = 0.0;
    double snr = 0.0;           // ||grad||^2 / tr_H, +inf when tr_H = 0 and the gradient is not
    std::vector<double> b_star; // per-query optimal baseline
};

// J(theta) = sum_q p(q) sum_o pi(o|q) F(q,o).
double exact_J(const TaskSpec& task, const PolicyParams& params);

// grad J = sum_q p(q) sum_o pi(o|q) score(q,o) F(q,o). Identical for any
// per-query constant baseline subtracted from F (the score has zero mean).
std::vector<double> exact_grad(const TaskSpec& task, const PolicyParams& params);

// L(theta) = optimal_value(task) - J(theta).
double exact_loss(const TaskSpec& task, const PolicyParams& params);

struct TraceResult {
    double trace = 0.0;
    std::optional<Matrix> matrix;
};

// Var over (q,o) of score(q,o) * (F(q,o) - b(q)).
TraceResult exact_H(const TaskSpec& task, const PolicyParams& params, const std::vector<double>& baseline,
                    MatrixMode mode = MatrixMode::Auto);

// Cov of two distinct same-query samples: E_q[m(q) m(q)^T] - grad grad^T with
// m(q) = sum_o pi(o|q) score(q,o) (F(q,o) - b(q)). Baseline-independent since
// the score has zero mean per query.
TraceResult exact_C(const TaskSpec& task, const PolicyParams& params, const std::vector<double>& baseline,
                    MatrixMode mode = MatrixMode::Auto);

// tr Var[xi] for a batch of N queries x G outputs: (1/NG) tr H + ((G-1)/NG) tr C.
double exact_var_estimator(const TaskSpec& task, const PolicyParams& params, const std::vector<double>& baseline,
                           int n, int g);

// b*(q) = sum_o pi ||score||^2 F / sum_o pi ||score||^2; single-output queries
// (zero weight) fall back to the plain expected reward.
std::vector<double> optimal_baseline(const TaskSpec& task, const PolicyParams& params);

// Per-query expected reward E_{o~pi}[F(q,o)].
std::vector<double> mean_reward_baseline(const TaskSpec& task, const PolicyParams& params);

// ||grad J||^2 / tr H(baseline); +inf when tr H = 0 with a nonzero gradient.
double exact_snr(const TaskSpec& task, const PolicyParams& params, const std::vector<double>& baseline);

struct BoundConstants {
    double B = 0.0; // reward bound, max |F|
    double L = 0.0; // log-likelihood smoothness constant
    double M = 0.0; // total score-norm budget
    double kappa() const { return B * L + B * B * M; }
};

// B = max|F|; L = 1 (per-query softmax Hessian spectral norm is at most
// max_o pi(o) <= 1, blocks disjoint); M = 2 * sum_q |O_q| (each ||score||^2 <= 2).
// `tightened` replaces L by the numerically computed max Hessian eigenvalue.
BoundConstants constants(const TaskSpec& task, const PolicyParams* params_for_tightened_L = nullptr);

ExactStats compute_exact_stats(const TaskSpec& task, const PolicyParams& params, const std::vector<double>& baseline,
                               MatrixMode mode = MatrixMode::Auto);

// Matrices materialize under Auto only up to this dimension.
inline constexpr int kMatrixAutoDimLimit = 64;

} // namespace oblr
