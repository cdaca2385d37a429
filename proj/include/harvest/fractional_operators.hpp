#pragma once

#include <vector>

#include "harvest/grid.hpp"

namespace harvest {

/// L1 kernel weights for the Caputo derivative of order alpha in (0, 1]
/// on a uniform grid of spacing dt:
///
///   b_k = dt^(-alpha) / Gamma(2 - alpha) * ((k+1)^(1-alpha) - k^(1-alpha))
///
/// for k = 0 .. m-1. Positive and strictly decreasing for alpha < 1.
/// At alpha = 1 the kernel degenerates to b_0 = 1/dt, b_{k>0} = 0.
std::vector<double> l1_weights(double alpha, int m, double dt);

/// Left Caputo derivative of order alpha of the sampled function f,
/// discretized with the L1 scheme:
///
///   D(t_m) = sum_{k=0}^{m-1} b_{m-k-1} * (f(t_{k+1}) - f(t_k))
///
/// The value at node 0 is 0 by convention (empty sum; the Caputo
/// derivative of a differentiable function vanishes at its base point).
/// Exactly zero on constant samples since each difference telescopes.
SampledTrajectory caputo_left_l1(const SampledTrajectory& f, double alpha);

/// Right Caputo derivative via time reflection: reverse the samples,
/// apply the left L1 kernel, reverse the result. Node n_steps is 0 by
/// the same convention.
SampledTrajectory caputo_right_l1(const SampledTrajectory& f, double alpha);

}  // namespace harvest
