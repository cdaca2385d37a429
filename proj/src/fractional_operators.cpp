#include "harvest/fractional_operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "harvest/special_functions.hpp"

namespace harvest {
namespace {

void require_order(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0)
        throw std::domain_error("Caputo L1: order alpha must lie in (0, 1]");
}

}  // namespace

std::vector<double> l1_weights(double alpha, int m, double dt) {
    require_order(alpha);
    if (m < 1)
        throw std::invalid_argument("l1_weights: m must be >= 1");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("l1_weights: dt must be positive");

    const double e = 1.0 - alpha;
    const double pref = std::pow(dt, -alpha) / gamma(2.0 - alpha);
    std::vector<double> b(static_cast<std::size_t>(m));
    double prev = 0.0;  // k^(1-alpha); defined as 0 at k = 0 even when alpha = 1
    for (int k = 0; k < m; ++k) {
        const double next = std::pow(static_cast<double>(k + 1), e);
        b[static_cast<std::size_t>(k)] = pref * (next - prev);
        prev = next;
    }
    return b;
}

SampledTrajectory caputo_left_l1(const SampledTrajectory& f, double alpha) {
    require_order(alpha);
    const int n = f.grid.n_steps;
    const std::vector<double> b = l1_weights(alpha, n, f.grid.dt());

    std::vector<double> out(static_cast<std::size_t>(n + 1), 0.0);
    for (int m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (int k = 0; k < m; ++k)
            acc += b[static_cast<std::size_t>(m - k - 1)] *
                   (f.values[static_cast<std::size_t>(k + 1)] -
                    f.values[static_cast<std::size_t>(k)]);
        out[static_cast<std::size_t>(m)] = acc;
    }
    return SampledTrajectory(f.grid, std::move(out));
}

SampledTrajectory caputo_right_l1(const SampledTrajectory& f, double alpha) {
    std::vector<double> reversed(f.values.rbegin(), f.values.rend());
    SampledTrajectory mirrored = caputo_left_l1(
        SampledTrajectory(f.grid, std::move(reversed)), alpha);
    std::reverse(mirrored.values.begin(), mirrored.values.end());
    return SampledTrajectory(f.grid, std::move(mirrored.values));
}

}  // namespace harvest
