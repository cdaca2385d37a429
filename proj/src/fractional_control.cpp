#include "harvest/fractional_control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "harvest/fractional_operators.hpp"
#include "harvest/special_functions.hpp"

namespace harvest {
namespace {

void require_scenario(const FractionalScenario& s) {
    validate_scenario(s.base);
    if (!std::isfinite(s.alpha) || s.alpha <= 0.0 || s.alpha > 1.0)
        throw std::domain_error("fractional scenario: alpha must lie in (0, 1]");
}

void require_full_span(const FractionalScenario& s, const UniformGrid& grid) {
    if (grid.t_start != 0.0 || grid.t_end != s.base.T)
        throw std::domain_error("grid must span [0, T] exactly");
}

// delta (T-t)^(1-alpha) e^(-delta T) E_{1,2-alpha}(delta (T-t)), the
// closed form of the backward memory term in the stationarity equation
double memory_term(const FractionalScenario& s, double t) {
    const double w = s.base.T - t;
    return s.base.delta * std::pow(w, 1.0 - s.alpha) *
           std::exp(-s.base.delta * s.base.T) *
           mittag_leffler(1.0, 2.0 - s.alpha, s.base.delta * w);
}

}  // namespace

double optimal_state_alpha(const FractionalScenario& s, double t) {
    require_scenario(s);
    if (!(t >= 0.0) || t > s.base.T)
        throw std::domain_error("optimal_state_alpha: t must lie in [0, T]");
    const double w = s.base.T - t;
    // pow(0, 0) = 1 gives the classical constant at alpha = 1;
    // pow(0, 1-alpha) = 0 gives exactly K/2 at t = T for alpha < 1
    const double factor = std::pow(w, 1.0 - s.alpha) * std::exp(-s.base.delta * w) *
                          mittag_leffler(1.0, 2.0 - s.alpha, s.base.delta * w);
    return s.base.K / 2.0 * (1.0 - s.base.delta / s.base.r * factor);
}

SampledTrajectory sample_optimal_state(const FractionalScenario& s,
                                       const UniformGrid& grid) {
    return sample_on_grid(grid, [&](double t) { return optimal_state_alpha(s, t); });
}

SampledTrajectory optimal_harvest_alpha(const FractionalScenario& s,
                                        const UniformGrid& grid) {
    require_scenario(s);
    require_full_span(s, grid);

    const SampledTrajectory state = sample_optimal_state(s, grid);
    const SampledTrajectory deriv = caputo_left_l1(state, s.alpha);

    std::vector<double> h(state.values.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        const double x = state.values[k];
        h[k] = s.base.r * x * (1.0 - x / s.base.K) - deriv.values[k];
    }
    return SampledTrajectory(grid, std::move(h));
}

SampledTrajectory euler_lagrange_residual(const FractionalScenario& s,
                                          const UniformGrid& grid) {
    require_scenario(s);
    require_full_span(s, grid);
    return sample_on_grid(grid, [&](double t) {
        const double x = optimal_state_alpha(s, t);
        return std::exp(-s.base.delta * t) * s.base.r * (1.0 - 2.0 * x / s.base.K) -
               memory_term(s, t);
    });
}

double verify_right_caputo_identity(const FractionalScenario& s,
                                    const UniformGrid& grid) {
    require_scenario(s);
    require_full_span(s, grid);

    const SampledTrajectory f = sample_on_grid(
        grid, [&](double t) { return -std::exp(-s.base.delta * t); });
    const SampledTrajectory right = caputo_right_l1(f, s.alpha);

    double max_err = 0.0;
    for (int k = 1; k < grid.n_steps; ++k) {
        const double err =
            std::fabs(-right.values[static_cast<std::size_t>(k)] -
                      memory_term(s, grid.node(k)));
        max_err = std::max(max_err, err);
    }
    return max_err;
}

}  // namespace harvest
