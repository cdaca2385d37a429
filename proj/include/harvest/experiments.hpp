#pragma once

#include "harvest/run_config.hpp"

namespace harvest {

/// Executes every requested experiment, writing one CSV per experiment
/// into cfg.output_dir (plus an SVG line chart per trajectory CSV when
/// cfg.plots is set):
///
///   classical.csv     t, x_classical, h_classical
///   fractional.csv    t, x_fractional, h_fractional
///   no_harvest.csv    t, x_alpha1, x_alpha
///   cross_policy.csv  t, x_frac_optimal, x_frac_classical_harvest
///   profits.csv       classical_profit, fractional_profit,
///                     cross_policy_profit, relative_gap
///
/// Values are printed with 12 significant digits, comma separators and
/// LF line endings; identical configs produce byte-identical files.
/// Returns 0 on success. Validation problems throw std::logic_error
/// (exit 1 at the CLI), numerical failures std::runtime_error (exit 2).
int run_experiments(const RunConfig& cfg);

}  // namespace harvest
