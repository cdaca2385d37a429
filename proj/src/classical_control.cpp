#include "harvest/classical_control.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace harvest {
namespace {

constexpr double kTimeTolerance = 1e-10;

void require_discount(const ScenarioParams& p) {
    if (!std::isfinite(p.r) || p.r <= 0.0)
        throw std::domain_error("scenario: r must be positive");
    if (!std::isfinite(p.delta) || p.delta < 0.0)
        throw std::domain_error("scenario: delta must be non-negative");
    if (p.delta >= p.r)
        throw std::domain_error(
            "scenario: delta must be below r (the singular state would not be "
            "positive), got delta = " +
            std::to_string(p.delta) + ", r = " + std::to_string(p.r));
}

// Usable upper end of a bisection bracket along an arc. Arcs anchored
// below x_minus carry c < 0 and blow up at t = ln(-c)/lambda; past the
// pole the formula jumps to the branch above x_plus and a sign test
// against the target would lie. Stop just short of the pole, where the
// arc has already plunged far below any target.
double clamp_to_pole(const ConstantHarvestSolution& arc, double hi) {
    if (arc.c >= 0.0)
        return hi;
    const double t_pole = std::log(-arc.c) / arc.lambda;
    if (t_pole <= 0.0 || t_pole >= hi)
        return hi;
    return t_pole - std::max(1e-9, 1e-9 * t_pole);
}

}  // namespace

void validate_scenario(const ScenarioParams& p) {
    require_discount(p);
    if (!std::isfinite(p.K) || p.K <= 0.0)
        throw std::domain_error("scenario: K must be positive");
    if (!std::isfinite(p.T) || p.T <= 0.0)
        throw std::domain_error("scenario: T must be positive");
    if (!std::isfinite(p.x0) || p.x0 <= 0.0 || p.x0 >= p.K)
        throw std::domain_error("scenario: x0 must lie in (0, K)");
    if (!std::isfinite(p.xT) || p.xT <= 0.0 || p.xT >= p.K)
        throw std::domain_error("scenario: xT must lie in (0, K)");
    if (!std::isfinite(p.h_min) || p.h_min < 0.0)
        throw std::domain_error("scenario: h_min must be non-negative");
    if (!std::isfinite(p.h_max) || p.h_max <= p.h_min)
        throw std::domain_error("scenario: h_max must exceed h_min");
}

double singular_state(const ScenarioParams& p) {
    require_discount(p);
    return p.K / 2.0 * (1.0 - p.delta / p.r);
}

double singular_harvest(const ScenarioParams& p) {
    require_discount(p);
    return p.K / 4.0 * (p.r * p.r - p.delta * p.delta) / p.r;
}

bool check_feasibility(const ScenarioParams& p) {
    validate_scenario(p);
    const double hs = singular_harvest(p);
    return p.h_min <= hs && hs <= p.h_max;
}

double find_switch_time(const ConstantHarvestSolution& arc, double target,
                        double bracket_lo, double bracket_hi) {
    if (!(bracket_lo < bracket_hi))
        throw std::invalid_argument("find_switch_time: empty bracket");

    double lo = bracket_lo;
    double hi = bracket_hi;
    const double f_lo = eval_arc(arc, lo) - target;
    const double f_hi = eval_arc(arc, hi) - target;
    if (f_lo == 0.0)
        return lo;
    if (f_hi == 0.0)
        return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0))
        throw std::domain_error(
            "find_switch_time: target " + std::to_string(target) +
            " is not bracketed on [" + std::to_string(bracket_lo) + ", " +
            std::to_string(bracket_hi) + "]; no feasible switch time exists");

    const bool lo_positive = f_lo > 0.0;
    while (hi - lo > kTimeTolerance) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = eval_arc(arc, mid) - target;
        if (f_mid == 0.0)
            return mid;
        if ((f_mid > 0.0) == lo_positive)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

PiecewiseSolution build_nfp(const ScenarioParams& p) {
    validate_scenario(p);
    const double xs = singular_state(p);
    const double hs = singular_harvest(p);
    if (!(p.h_min <= hs && hs <= p.h_max))
        throw std::domain_error(
            "infeasible scenario: h_min <= (K/4)(r^2 - delta^2)/r <= h_max fails (" +
            std::to_string(p.h_min) + " <= " + std::to_string(hs) +
            " <= " + std::to_string(p.h_max) + ")");

    const LogisticParams lp{p.r, p.K};

    PiecewiseSolution sol{};
    sol.singular_state = xs;
    sol.singular_harvest = hs;

    if (p.x0 == xs) {
        // zero-length approach; an unharvested arc through (0, x0) keeps
        // the segment well defined without root finding
        sol.approach = solve_constant_harvest(lp, 0.0, 0.0, p.x0);
        sol.approach_harvest = p.h_min;
        sol.t_min = 0.0;
    } else {
        sol.approach_harvest = p.x0 < xs ? p.h_min : p.h_max;
        sol.approach = solve_constant_harvest(lp, sol.approach_harvest, 0.0, p.x0);
        sol.t_min = find_switch_time(sol.approach, xs, 0.0,
                                     clamp_to_pole(sol.approach, p.T));
    }

    if (p.xT == xs) {
        sol.exit = solve_constant_harvest(lp, 0.0, p.T, p.xT);
        sol.exit_harvest = p.h_min;
        sol.t_max = p.T;
    } else {
        sol.exit_harvest = p.xT > xs ? p.h_min : p.h_max;
        sol.exit = solve_constant_harvest(lp, sol.exit_harvest, p.T, p.xT);
        sol.t_max = find_switch_time(sol.exit, xs, 0.0, p.T);
    }

    if (sol.t_min > sol.t_max)
        throw std::domain_error(
            "infeasible scenario: approach reaches the singular state at t = " +
            std::to_string(sol.t_min) + ", after the latest exit time t = " +
            std::to_string(sol.t_max));
    return sol;
}

NfpSamples sample_nfp(const PiecewiseSolution& sol, const ScenarioParams& p,
                      const UniformGrid& grid) {
    if (grid.t_start < 0.0 || grid.t_end > p.T)
        throw std::domain_error("sample_nfp: grid must lie within [0, T]");

    const int n = grid.n_steps;
    std::vector<double> state(static_cast<std::size_t>(n + 1));
    std::vector<double> harvest(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        const double t = grid.node(k);
        double x, h;
        if (t < sol.t_min) {
            x = eval_arc(sol.approach, t);
            h = sol.approach_harvest;
        } else if (t <= sol.t_max) {
            x = sol.singular_state;
            h = sol.singular_harvest;
        } else {
            x = eval_arc(sol.exit, t);
            h = sol.exit_harvest;
        }
        state[static_cast<std::size_t>(k)] = x;
        harvest[static_cast<std::size_t>(k)] = h;
    }
    return {SampledTrajectory(grid, std::move(state)),
            SampledTrajectory(grid, std::move(harvest))};
}

}  // namespace harvest
