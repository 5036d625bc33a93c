#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oblr {

// One registered invariant: theorem-keyed name, verdict, and on failure the
// offending inputs serialized as JSON.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    std::string counterexample; // JSON, empty when passing
};

struct CheckOptions {
    std::uint64_t seed = 2024;
    int random_instances = 200;   // (task, theta) draws for the randomized invariants
    int heavy_instances = 1000;   // draws for the cheap per-instance bounds (Lemma A.8 etc.)
    double grpo_std_shift = 0.0;  // nonzero seeds a fault into the GRPO formula check
};

// Runs the invariant suites of the oracle, estimator, and schedule modules.
// Deterministic for a fixed seed.
std::vector<CheckResult> run_all_checks(const CheckOptions& options);

bool all_pass(const std::vector<CheckResult>& results);

std::string checks_report_json(const std::vector<CheckResult>& results);

CheckOptions check_options_from_json(const std::string& json_text);

} // namespace oblr
