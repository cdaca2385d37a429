#include "harvest/logistic_dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace harvest {
namespace {

void require_params(const LogisticParams& p) {
    if (!std::isfinite(p.r) || p.r <= 0.0)
        throw std::domain_error("logistic: r must be positive");
    if (!std::isfinite(p.K) || p.K <= 0.0)
        throw std::domain_error("logistic: K must be positive");
}

}  // namespace

double logistic_rhs(const LogisticParams& p, double h, double /*t*/, double x) {
    return p.r * x * (1.0 - x / p.K) - h;
}

Equilibria equilibria(const LogisticParams& p, double h) {
    require_params(p);
    if (!std::isfinite(h) || h < 0.0)
        throw std::domain_error("equilibria: harvest must be non-negative");
    const double msy = p.r * p.K / 4.0;
    if (h >= msy)
        throw std::domain_error(
            "equilibria: harvest " + std::to_string(h) +
            " is at or above the maximum sustainable yield rK/4 = " +
            std::to_string(msy) + "; no equilibrium exists");
    const double s = std::sqrt(1.0 - 4.0 * h / (p.r * p.K));
    return {p.K / 2.0 * (1.0 - s), p.K / 2.0 * (1.0 + s)};
}

ConstantHarvestSolution solve_constant_harvest(const LogisticParams& p, double h,
                                               double t_ref, double x_ref) {
    const Equilibria eq = equilibria(p, h);
    if (!std::isfinite(t_ref) || !std::isfinite(x_ref))
        throw std::invalid_argument("solve_constant_harvest: anchor must be finite");
    if (x_ref == eq.x_minus)
        throw std::domain_error(
            "solve_constant_harvest: anchor sits on the unstable equilibrium x_minus = " +
            std::to_string(eq.x_minus));

    const double lambda = p.r / p.K * (eq.x_plus - eq.x_minus);
    const double c =
        (eq.x_plus - x_ref) * std::exp(lambda * t_ref) / (x_ref - eq.x_minus);
    return {eq.x_minus, eq.x_plus, lambda, c};
}

double eval_arc(const ConstantHarvestSolution& sol, double t) {
    const double u = std::exp(sol.lambda * t);
    return (sol.c * sol.x_minus + sol.x_plus * u) / (sol.c + u);
}

}  // namespace harvest
