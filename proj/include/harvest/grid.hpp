#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace harvest {

/// Regular partition of [t_start, t_end] into n_steps intervals
/// (n_steps + 1 nodes). Node n_steps is exactly t_end.
struct UniformGrid {
    double t_start;
    double t_end;
    int n_steps;

    UniformGrid(double start, double end, int steps)
        : t_start(start), t_end(end), n_steps(steps) {
        if (!std::isfinite(start) || !std::isfinite(end))
            throw std::invalid_argument("UniformGrid: endpoints must be finite");
        if (!(end > start))
            throw std::invalid_argument("UniformGrid: t_end must exceed t_start");
        if (steps < 1)
            throw std::invalid_argument("UniformGrid: n_steps must be >= 1");
    }

    double dt() const { return (t_end - t_start) / n_steps; }
    int node_count() const { return n_steps + 1; }

    double node(int k) const {
        // last node pinned to t_end so downstream [0, T] domain checks
        // never see a rounded-up endpoint
        return k == n_steps ? t_end : t_start + k * dt();
    }

    bool operator==(const UniformGrid&) const = default;
};

/// Function samples on a uniform grid; values[k] belongs to grid.node(k).
struct SampledTrajectory {
    UniformGrid grid;
    std::vector<double> values;

    SampledTrajectory(UniformGrid g, std::vector<double> v)
        : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.node_count())
            throw std::invalid_argument(
                "SampledTrajectory: expected " + std::to_string(grid.node_count()) +
                " values, got " + std::to_string(values.size()));
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!std::isfinite(values[i]))
                throw std::invalid_argument(
                    "SampledTrajectory: non-finite value at node " + std::to_string(i));
    }
};

template <class F>
SampledTrajectory sample_on_grid(const UniformGrid& grid, F&& f) {
    std::vector<double> v(static_cast<std::size_t>(grid.node_count()));
    for (int k = 0; k <= grid.n_steps; ++k)
        v[static_cast<std::size_t>(k)] = f(grid.node(k));
    return SampledTrajectory(grid, std::move(v));
}

}  // namespace harvest
