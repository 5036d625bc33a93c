#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oblr/trainer.hpp"

namespace oblr {

// Sweep axes; empty vectors mean "not swept" (the base value is used).
struct SweepAxes {
    std::vector<std::string> algorithm;
    std::vector<std::uint64_t> seed;
    std::vector<int> queries_per_step;
    std::vector<int> group_size;
    std::vector<std::string> lr_mode;

    bool empty() const;
    std::size_t cell_count() const;
};

// One JSON document drives everything: task source, run settings, optional
// sweep axes. Parse errors carry the offending field name.
struct ExperimentConfig {
    RunConfig run;
    SweepAxes sweep;
};

ExperimentConfig parse_experiment_config(const std::string& json_text,
                                         std::optional<std::uint64_t> seed_override = std::nullopt);

// Echo of the effective run settings (task inlined), value-exact doubles.
std::string run_config_json(const RunConfig& config);

} // namespace oblr
