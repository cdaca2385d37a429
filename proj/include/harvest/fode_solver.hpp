#pragma once

#include <functional>
#include <vector>

#include "harvest/grid.hpp"

namespace harvest {

/// Scalar Caputo initial-value problem D^alpha x = rhs(t, x), x(t_start) = x0,
/// with alpha in (0, 1], discretized on a uniform grid.
struct FodeProblem {
    double alpha;
    double x0;
    std::function<double(double, double)> rhs;
    UniformGrid grid;
};

struct AbmWeights {
    std::vector<double> a;  // corrector (product-trapezoid), size n + 2
    std::vector<double> b;  // predictor (product-rectangle), size n + 1
};

/// Quadrature weights for the step from t_n to t_{n+1} of the fractional
/// Adams-Bashforth-Moulton scheme:
///
///   b_{j,n+1} = dt^alpha / Gamma(alpha+1) * ((n+1-j)^alpha - (n-j)^alpha)
///   a_{j,n+1} = dt^alpha / Gamma(alpha+2) * c_{j,n+1}
///     c_{0,n+1}   = n^(alpha+1) - (n - alpha)(n+1)^alpha
///     c_{j,n+1}   = (n-j+2)^(alpha+1) + (n-j)^(alpha+1) - 2(n-j+1)^(alpha+1)
///     c_{n+1,n+1} = 1
///
/// All weights are positive. At alpha = 1 they collapse to the rectangle
/// rule (b_j = dt) and the trapezoid rule (dt/2, dt, ..., dt, dt/2).
AbmWeights abm_weights(double alpha, int n, double dt);

/// Fractional Adams predictor-corrector solve. Each step forms the
/// rectangle-rule predictor u^P, then applies the trapezoid corrector
/// corrector_iters times (once by default), re-evaluating the rhs at the
/// newest iterate. Throws std::runtime_error if any |u_k| exceeds 1e12.
SampledTrajectory fabm_solve(const FodeProblem& p, int corrector_iters = 1);

}  // namespace harvest
