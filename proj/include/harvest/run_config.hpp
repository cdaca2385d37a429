#pragma once

#include <filesystem>
#include <set>
#include <string>

#include "harvest/classical_control.hpp"

namespace harvest {

enum class Experiment {
    classical,
    fractional,
    compare,
    no_harvest,
    cross_policy,
};

Experiment experiment_from_name(const std::string& name);
std::string experiment_name(Experiment e);

/// Everything one invocation computes: the scenario, the fractional
/// order, grid resolution, which experiments to emit, and where.
struct RunConfig {
    ScenarioParams scenario;
    double alpha;
    int grid_points = 10000;
    std::set<Experiment> experiments;
    std::filesystem::path output_dir = ".";
    bool plots = false;
};

/// Parses the flat JSON config (keys r, K, delta, T, x0, xT, h_min,
/// h_max, alpha, grid_points, experiments, output_dir). Missing optional
/// keys fall back to defaults: all experiments, 10000 grid points,
/// current directory. Throws std::invalid_argument on malformed input.
RunConfig load_run_config(const std::filesystem::path& file);

/// Full invariant check used by the runner before any computation.
void validate_run_config(const RunConfig& cfg);

}  // namespace harvest
