#include "harvest/fode_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "harvest/special_functions.hpp"

namespace harvest {
namespace {

constexpr double kDivergenceGuard = 1e12;

void require_order(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
        throw std::domain_error("fabm: order alpha must lie in (0, 1]");
}

}  // namespace

AbmWeights abm_weights(double alpha, int n, double dt) {
    require_order(alpha);
    if (n < 0)
        throw std::invalid_argument("abm_weights: n must be >= 0");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("abm_weights: dt must be positive");

    const double dta = std::pow(dt, alpha);
    const double pref_b = dta / gamma(alpha + 1.0);
    const double pref_a = dta / gamma(alpha + 2.0);

    AbmWeights w;
    w.b.resize(static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j)
        w.b[static_cast<std::size_t>(j)] =
            pref_b * (std::pow(static_cast<double>(n + 1 - j), alpha) -
                      std::pow(static_cast<double>(n - j), alpha));

    w.a.resize(static_cast<std::size_t>(n + 2));
    w.a[0] = pref_a * (std::pow(static_cast<double>(n), alpha + 1.0) -
                       (n - alpha) * std::pow(static_cast<double>(n + 1), alpha));
    for (int j = 1; j <= n; ++j) {
        const double q = static_cast<double>(n - j + 1);
        w.a[static_cast<std::size_t>(j)] =
            pref_a * (std::pow(q + 1.0, alpha + 1.0) + std::pow(q - 1.0, alpha + 1.0) -
                      2.0 * std::pow(q, alpha + 1.0));
    }
    w.a[static_cast<std::size_t>(n + 1)] = pref_a;
    return w;
}

SampledTrajectory fabm_solve(const FodeProblem& p, int corrector_iters) {
    require_order(p.alpha);
    if (corrector_iters < 1)
        throw std::invalid_argument("fabm_solve: corrector_iters must be >= 1");
    if (!p.rhs)
        throw std::invalid_argument("fabm_solve: rhs is empty");
    if (!std::isfinite(p.x0))
        throw std::invalid_argument("fabm_solve: x0 must be finite");

    const int n = p.grid.n_steps;
    const double dt = p.grid.dt();
    const double dta = std::pow(dt, p.alpha);
    const double pref_b = dta / gamma(p.alpha + 1.0);
    const double pref_a = dta / gamma(p.alpha + 2.0);

    // k^alpha and k^(alpha+1) tables; the per-step weights are first and
    // second differences of these, so the whole solve costs O(n^2) adds
    std::vector<double> pow_a(static_cast<std::size_t>(n + 2));
    std::vector<double> pow_a1(static_cast<std::size_t>(n + 2));
    for (int k = 0; k <= n + 1; ++k) {
        pow_a[static_cast<std::size_t>(k)] = std::pow(static_cast<double>(k), p.alpha);
        pow_a1[static_cast<std::size_t>(k)] =
            std::pow(static_cast<double>(k), p.alpha + 1.0);
    }

    std::vector<double> u(static_cast<std::size_t>(n + 1));
    std::vector<double> f(static_cast<std::size_t>(n + 1));
    u[0] = p.x0;
    f[0] = p.rhs(p.grid.node(0), u[0]);

    for (int step = 0; step < n; ++step) {
        // predictor: product-rectangle memory sum
        double acc_p = 0.0;
        for (int j = 0; j <= step; ++j)
            acc_p += (pow_a[static_cast<std::size_t>(step + 1 - j)] -
                      pow_a[static_cast<std::size_t>(step - j)]) *
                     f[static_cast<std::size_t>(j)];
        const double predicted = p.x0 + pref_b * acc_p;

        // corrector history: product-trapezoid weights over settled nodes
        double acc_c = (pow_a1[static_cast<std::size_t>(step)] -
                        (step - p.alpha) * pow_a[static_cast<std::size_t>(step + 1)]) *
                       f[0];
        for (int j = 1; j <= step; ++j) {
            const std::size_t q = static_cast<std::size_t>(step - j + 1);
            acc_c += (pow_a1[q + 1] + pow_a1[q - 1] - 2.0 * pow_a1[q]) *
                     f[static_cast<std::size_t>(j)];
        }

        const double t_next = p.grid.node(step + 1);
        double next = predicted;
        for (int it = 0; it < corrector_iters; ++it)
            next = p.x0 + pref_a * (acc_c + p.rhs(t_next, next));

        if (!std::isfinite(next) || std::fabs(next) > kDivergenceGuard)
            throw std::runtime_error("fabm_solve: trajectory diverged at t = " +
                                     std::to_string(t_next));
        u[static_cast<std::size_t>(step + 1)] = next;
        f[static_cast<std::size_t>(step + 1)] = p.rhs(t_next, next);
    }
    return SampledTrajectory(p.grid, std::move(u));
}

}  // namespace harvest
