#pragma once

#include <optional>

#include "harvest/classical_control.hpp"
#include "harvest/grid.hpp"

namespace harvest {

struct ProfitReport {
    double classical_profit;
    double fractional_profit;
    std::optional<double> cross_policy_profit;
    double relative_gap;  // |classical - fractional| / classical
};

/// Discounted profit integral of a sampled harvest stream,
/// trapezoid rule over e^(-delta t_k) h(t_k). Exact on constants.
double discounted_profit(const SampledTrajectory& h, double delta);

/// Classical-vs-fractional profit comparison on a common grid. The
/// classical stream comes from the piecewise optimal construction, the
/// fractional one from the order-alpha harvest with its two end nodes
/// replaced by linear extrapolation from the neighbouring interior
/// nodes (the L1 endpoint values are convention, not signal). When
/// requested, the cross-policy profit is what an agency applying the
/// classical policy to order-alpha dynamics actually realizes: the
/// fractional optimum, not its classical estimate.
ProfitReport compare_profits(const ScenarioParams& p, double alpha,
                             const UniformGrid& grid,
                             bool with_cross_policy = false);

}  // namespace harvest
