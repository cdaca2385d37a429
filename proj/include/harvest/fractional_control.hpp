#pragma once

#include "harvest/classical_control.hpp"
#include "harvest/grid.hpp"

namespace harvest {

/// Harvest scenario with Caputo dynamics of order alpha in (0, 1].
struct FractionalScenario {
    ScenarioParams base;
    double alpha;
};

/// Optimal stock of the fractional problem at time t in [0, T]:
///
///   x*(t) = K/2 * (1 - (delta/r) (T-t)^(1-alpha) e^(-delta (T-t))
///                      E_{1, 2-alpha}(delta (T-t)))
///
/// For alpha < 1 the vanishing power factor makes x*(T) exactly K/2; for
/// alpha = 1 the expression collapses to the classical constant
/// (K/2)(1 - delta/r). With delta = 0 it is K/2 for every alpha.
double optimal_state_alpha(const FractionalScenario& s, double t);

/// x*(t) sampled on a grid.
SampledTrajectory sample_optimal_state(const FractionalScenario& s,
                                       const UniformGrid& grid);

/// Optimal harvest recovered from the dynamics:
///
///   h*(t_k) = r x*(t_k)(1 - x*(t_k)/K) - D^alpha[x*](t_k)
///
/// with the Caputo term evaluated by the L1 scheme. The grid must span
/// [0, T]. The two end nodes inherit the L1 endpoint convention and are
/// reported as-is; comparisons should use interior nodes.
SampledTrajectory optimal_harvest_alpha(const FractionalScenario& s,
                                        const UniformGrid& grid);

/// Stationarity residual of the variational problem evaluated at x*:
///
///   e^(-delta t) r (1 - 2 x*(t)/K)
///     - delta (T-t)^(1-alpha) e^(-delta T) E_{1,2-alpha}(delta (T-t))
///
/// Identically zero in exact arithmetic; the samples expose only
/// floating-point residue.
SampledTrajectory euler_lagrange_residual(const FractionalScenario& s,
                                          const UniformGrid& grid);

/// Numerical check of the closed form behind the residual above: the
/// right Caputo L1 derivative of t -> -e^(-delta t), negated, against
/// delta (T-t)^(1-alpha) e^(-delta T) E_{1,2-alpha}(delta (T-t)).
/// Returns the maximum absolute deviation over interior nodes.
double verify_right_caputo_identity(const FractionalScenario& s,
                                    const UniformGrid& grid);

}  // namespace harvest
