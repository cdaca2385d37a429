#include "harvest/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "harvest/economics.hpp"
#include "harvest/fode_solver.hpp"
#include "harvest/fractional_control.hpp"
#include "harvest/logistic_dynamics.hpp"

namespace harvest {
namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Column {
    std::string name;
    const std::vector<double>* values;
};

void write_csv(const std::filesystem::path& path, const std::vector<Column>& cols) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i].name;
    out << '\n';
    const std::size_t rows = cols.front().values->size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < cols.size(); ++i)
            out << (i ? "," : "") << format_value((*cols[i].values)[r]);
        out << '\n';
    }
}

// minimal static line chart; one polyline per series
void write_svg_chart(const std::filesystem::path& path, const std::string& title,
                     const std::vector<double>& x, const std::vector<Column>& series) {
    static const char* kColors[] = {"#4682b4", "#b22222", "#2e8b57"};
    const double width = 880, height = 560;
    const double ml = 70, mr = 24, mt = 44, mb = 52;

    double x_lo = x.front(), x_hi = x.back();
    double y_lo = series[0].values->front(), y_hi = y_lo;
    for (const auto& s : series)
        for (double v : *s.values) {
            y_lo = std::min(y_lo, v);
            y_hi = std::max(y_hi, v);
        }
    if (y_hi == y_lo) {
        y_lo -= 1.0;
        y_hi += 1.0;
    }
    const double pad = 0.05 * (y_hi - y_lo);
    y_lo -= pad;
    y_hi += pad;

    auto px = [&](double v) {
        return ml + (v - x_lo) / (x_hi - x_lo) * (width - ml - mr);
    };
    auto py = [&](double v) {
        return height - mb - (v - y_lo) / (y_hi - y_lo) * (height - mt - mb);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"16\">" << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\""
        << width - mr << "\" y2=\"" << height - mb
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double tx = x_lo + (x_hi - x_lo) * i / 4.0;
        const double ty = y_lo + (y_hi - y_lo) * i / 4.0;
        out << "<text x=\"" << px(tx) << "\" y=\"" << height - mb + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">" << format_value(tx) << "</text>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py(ty) + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << format_value(ty) << "</text>\n";
    }

    for (std::size_t s = 0; s < series.size(); ++s) {
        out << "<polyline fill=\"none\" stroke=\"" << kColors[s % 3]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < x.size(); ++i)
            out << px(x[i]) << ',' << py((*series[s].values)[i]) << ' ';
        out << "\"/>\n";
        out << "<text x=\"" << width - mr - 8 << "\" y=\"" << mt + 18 * (s + 1)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
               "fill=\"" << kColors[s % 3] << "\">" << series[s].name << "</text>\n";
    }
    out << "</svg>\n";
}

void emit(const RunConfig& cfg, const std::string& stem,
          const std::vector<double>& t, std::vector<Column> cols) {
    std::vector<Column> all;
    all.push_back({"t", &t});
    for (auto& c : cols)
        all.push_back(c);
    const auto csv = cfg.output_dir / (stem + ".csv");
    write_csv(csv, all);
    std::cout << "wrote " << csv.string() << '\n';
    if (cfg.plots) {
        const auto svg = cfg.output_dir / (stem + ".svg");
        write_svg_chart(svg, stem, t, cols);
        std::cout << "wrote " << svg.string() << '\n';
    }
}

}  // namespace

int run_experiments(const RunConfig& cfg) {
    validate_run_config(cfg);
    std::filesystem::create_directories(cfg.output_dir);

    const ScenarioParams& p = cfg.scenario;
    const UniformGrid grid(0.0, p.T, cfg.grid_points);
    std::vector<double> t(static_cast<std::size_t>(grid.node_count()));
    for (int k = 0; k <= grid.n_steps; ++k)
        t[static_cast<std::size_t>(k)] = grid.node(k);

    const FractionalScenario fs{p, cfg.alpha};
    const auto want = [&](Experiment e) { return cfg.experiments.count(e) > 0; };

    if (want(Experiment::classical)) {
        const PiecewiseSolution nfp = build_nfp(p);
        const NfpSamples samples = sample_nfp(nfp, p, grid);
        emit(cfg, "classical", t,
             {{"x_classical", &samples.state.values},
              {"h_classical", &samples.harvest.values}});
    }

    if (want(Experiment::fractional)) {
        const SampledTrajectory state = sample_optimal_state(fs, grid);
        const SampledTrajectory h = optimal_harvest_alpha(fs, grid);
        emit(cfg, "fractional", t,
             {{"x_fractional", &state.values}, {"h_fractional", &h.values}});
    }

    if (want(Experiment::no_harvest)) {
        const ConstantHarvestSolution free_growth =
            solve_constant_harvest({p.r, p.K}, 0.0, 0.0, p.x0);
        const SampledTrajectory classical = sample_on_grid(
            grid, [&](double tt) { return eval_arc(free_growth, tt); });
        const SampledTrajectory fractional = fabm_solve(
            {cfg.alpha, p.x0,
             [&](double tt, double x) { return logistic_rhs({p.r, p.K}, 0.0, tt, x); },
             grid});
        emit(cfg, "no_harvest", t,
             {{"x_alpha1", &classical.values}, {"x_alpha", &fractional.values}});
    }

    if (want(Experiment::cross_policy)) {
        const double hs = singular_harvest(p);
        const SampledTrajectory optimal = sample_optimal_state(fs, grid);
        const SampledTrajectory crossed = fabm_solve(
            {cfg.alpha, p.x0,
             [&](double tt, double x) { return logistic_rhs({p.r, p.K}, hs, tt, x); },
             grid});
        emit(cfg, "cross_policy", t,
             {{"x_frac_optimal", &optimal.values},
              {"x_frac_classical_harvest", &crossed.values}});
    }

    if (want(Experiment::compare)) {
        const ProfitReport report = compare_profits(
            p, cfg.alpha, grid, want(Experiment::cross_policy));

        const auto path = cfg.output_dir / "profits.csv";
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot open '" + path.string() +
                                     "' for writing");
        out << "classical_profit,fractional_profit,cross_policy_profit,"
               "relative_gap\n";
        out << format_value(report.classical_profit) << ','
            << format_value(report.fractional_profit) << ',';
        if (report.cross_policy_profit)
            out << format_value(*report.cross_policy_profit);
        out << ',' << format_value(report.relative_gap) << '\n';
        out.close();
        std::cout << "wrote " << path.string() << '\n';

        std::cout << "classical profit:   " << format_value(report.classical_profit)
                  << "\nfractional profit:  "
                  << format_value(report.fractional_profit) << '\n';
        if (report.cross_policy_profit)
            std::cout << "cross-policy profit: "
                      << format_value(*report.cross_policy_profit) << '\n';
        std::cout << "relative gap:       " << format_value(report.relative_gap)
                  << '\n';
    }
    return 0;
}

}  // namespace harvest
