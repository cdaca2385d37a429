#pragma once

#include "harvest/grid.hpp"
#include "harvest/logistic_dynamics.hpp"

namespace harvest {

/// Full scenario for the discounted harvest problem on [0, T]:
/// logistic growth (r, K), discount rate delta, horizon T, boundary
/// stocks x0 and xT, and the admissible harvest band [h_min, h_max].
struct ScenarioParams {
    double r;
    double K;
    double delta;
    double T;
    double x0;
    double xT;
    double h_min;
    double h_max;
};

/// Throws std::domain_error naming the violated invariant. Requires
/// r, K, T > 0; 0 <= delta < r; x0, xT in (0, K); 0 <= h_min < h_max.
void validate_scenario(const ScenarioParams& p);

/// Optimal approach-stay-exit construction: follow the approach arc on
/// [0, t_min], hold the singular steady state on [t_min, t_max], follow
/// the exit arc on [t_max, T]. The harvest bound each arc was built with
/// is stored alongside it; re-deriving it from a state comparison is
/// fragile exactly at the junctions.
struct PiecewiseSolution {
    double t_min;
    double t_max;
    ConstantHarvestSolution approach;
    ConstantHarvestSolution exit;
    double approach_harvest;
    double exit_harvest;
    double singular_state;
    double singular_harvest;
};

struct NfpSamples {
    SampledTrajectory state;
    SampledTrajectory harvest;
};

/// Interior stationary stock (K/2)(1 - delta/r). Requires delta < r.
double singular_state(const ScenarioParams& p);

/// Harvest sustaining the singular state: (K/4)(r^2 - delta^2)/r.
double singular_harvest(const ScenarioParams& p);

/// True iff the singular harvest lies within [h_min, h_max] (inclusive).
bool check_feasibility(const ScenarioParams& p);

/// First time the arc crosses the target value inside [bracket_lo,
/// bracket_hi], located by bisection to a time tolerance of 1e-10.
/// Requires the arc to be monotone across the bracket; throws
/// std::domain_error if the target is not bracketed.
double find_switch_time(const ConstantHarvestSolution& arc, double target,
                        double bracket_lo, double bracket_hi);

/// Builds the piecewise optimal solution. The approach arc is anchored
/// at (0, x0) and uses h_min when x0 is below the singular state, h_max
/// when above; the exit arc is anchored at (T, xT) with the mirrored
/// rule. Boundary points equal to the singular state degenerate the
/// corresponding arc to zero length. Throws std::domain_error when the
/// singular harvest violates the bounds, a switch time does not exist,
/// or t_min > t_max.
PiecewiseSolution build_nfp(const ScenarioParams& p);

/// Samples state and harvest of the piecewise solution on a grid.
NfpSamples sample_nfp(const PiecewiseSolution& sol, const ScenarioParams& p,
                      const UniformGrid& grid);

}  // namespace harvest
