#pragma once

namespace harvest {

/// Logistic growth parameters: intrinsic rate r (1/time) and carrying
/// capacity K (biomass). Both must be positive.
struct LogisticParams {
    double r;
    double K;
};

/// Equilibria of the constant-harvest logistic equation, x_minus < x_plus.
struct Equilibria {
    double x_minus;
    double x_plus;
};

/// Closed-form arc of dx/dt = r x (1 - x/K) - h for constant h:
///
///   x(t) = (c * x_minus + x_plus * e^(lambda t)) / (c + e^(lambda t))
///
/// with lambda = (r/K)(x_plus - x_minus) and c fixed by one anchor point.
/// Anchors between the equilibria give c > 0 and an arc that climbs
/// monotonically to x_plus; anchors below x_minus give c < 0 and a
/// declining arc with a finite-time pole at t = ln(-c)/lambda.
struct ConstantHarvestSolution {
    double x_minus;
    double x_plus;
    double lambda;
    double c;
};

/// Right-hand side r x (1 - x/K) - h of the harvested logistic equation.
double logistic_rhs(const LogisticParams& p, double h, double t, double x);

/// Roots of the constant-harvest RHS. Throws std::domain_error when
/// h >= rK/4 (harvest at or above maximum sustainable yield leaves no
/// equilibrium; the dynamics are strictly decreasing).
Equilibria equilibria(const LogisticParams& p, double h);

/// Unique closed-form arc through (t_ref, x_ref). Throws if the
/// equilibria do not exist or the anchor sits exactly on x_minus.
ConstantHarvestSolution solve_constant_harvest(const LogisticParams& p, double h,
                                               double t_ref, double x_ref);

double eval_arc(const ConstantHarvestSolution& sol, double t);

}  // namespace harvest
