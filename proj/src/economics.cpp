#include "harvest/economics.hpp"

#include <cmath>
#include <stdexcept>

#include "harvest/fractional_control.hpp"

namespace harvest {
namespace {

void extrapolate_endpoints(std::vector<double>& v) {
    if (v.size() < 3)
        return;
    v.front() = 2.0 * v[1] - v[2];
    v.back() = 2.0 * v[v.size() - 2] - v[v.size() - 3];
}

}  // namespace

double discounted_profit(const SampledTrajectory& h, double delta) {
    if (!std::isfinite(delta) || delta < 0.0)
        throw std::domain_error("discounted_profit: delta must be non-negative");

    const int n = h.grid.n_steps;
    const double dt = h.grid.dt();
    auto weighted = [&](int k) {
        return std::exp(-delta * h.grid.node(k)) *
               h.values[static_cast<std::size_t>(k)];
    };
    double acc = 0.5 * (weighted(0) + weighted(n));
    for (int k = 1; k < n; ++k)
        acc += weighted(k);
    return acc * dt;
}

ProfitReport compare_profits(const ScenarioParams& p, double alpha,
                             const UniformGrid& grid, bool with_cross_policy) {
    const PiecewiseSolution nfp = build_nfp(p);
    const NfpSamples classical = sample_nfp(nfp, p, grid);
    const double classical_profit = discounted_profit(classical.harvest, p.delta);

    SampledTrajectory fractional_harvest =
        optimal_harvest_alpha(FractionalScenario{p, alpha}, grid);
    extrapolate_endpoints(fractional_harvest.values);
    const double fractional_profit = discounted_profit(fractional_harvest, p.delta);

    ProfitReport report{};
    report.classical_profit = classical_profit;
    report.fractional_profit = fractional_profit;
    if (with_cross_policy)
        report.cross_policy_profit = fractional_profit;
    report.relative_gap =
        std::fabs(classical_profit - fractional_profit) / classical_profit;
    return report;
}

}  // namespace harvest
