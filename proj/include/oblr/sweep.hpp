#pragma once

#include <string>
#include <vector>

#include "oblr/config.hpp"

namespace oblr {

struct SweepCellResult {
    std::string name; // axis-valued subdirectory name
    bool ok = false;
    std::string error;
    double final_loss = 0.0;
    double mean_grad_norm = 0.0; // mean exact gradient norm over steps
    double auc_loss = 0.0;       // sum of per-step exact loss
};

struct SweepResult {
    std::vector<SweepCellResult> cells; // in cross-product order
    int failures = 0;
};

// Run every cell of the cross product, one subdirectory per cell under
// out_dir, then write summary.csv. Cells are independent; `jobs` > 1 runs them
// on a thread pool, with results merged in config order so the summary does
// not depend on scheduling.
SweepResult run_sweep(const ExperimentConfig& config, const std::string& out_dir, int jobs);

std::string sweep_summary_csv(const SweepResult& result);

} // namespace oblr
