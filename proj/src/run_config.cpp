#include "harvest/run_config.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace harvest {
namespace {

const std::set<Experiment> kAllExperiments = {
    Experiment::classical, Experiment::fractional, Experiment::compare,
    Experiment::no_harvest, Experiment::cross_policy};

double require_number(const nlohmann::json& j, const std::string& key) {
    if (!j.contains(key))
        throw std::invalid_argument("config: missing key '" + key + "'");
    if (!j[key].is_number())
        throw std::invalid_argument("config: key '" + key + "' must be a number");
    return j[key].get<double>();
}

}  // namespace

Experiment experiment_from_name(const std::string& name) {
    if (name == "classical") return Experiment::classical;
    if (name == "fractional") return Experiment::fractional;
    if (name == "compare") return Experiment::compare;
    if (name == "no_harvest") return Experiment::no_harvest;
    if (name == "cross_policy") return Experiment::cross_policy;
    throw std::invalid_argument(
        "config: unknown experiment '" + name +
        "' (expected classical, fractional, compare, no_harvest, cross_policy)");
}

std::string experiment_name(Experiment e) {
    switch (e) {
        case Experiment::classical: return "classical";
        case Experiment::fractional: return "fractional";
        case Experiment::compare: return "compare";
        case Experiment::no_harvest: return "no_harvest";
        case Experiment::cross_policy: return "cross_policy";
    }
    throw std::logic_error("experiment_name: unreachable");
}

RunConfig load_run_config(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw std::invalid_argument("config: cannot open '" + file.string() + "'");

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: malformed JSON in '" + file.string() +
                                    "': " + e.what());
    }

    RunConfig cfg{};
    cfg.scenario.r = require_number(j, "r");
    cfg.scenario.K = require_number(j, "K");
    cfg.scenario.delta = require_number(j, "delta");
    cfg.scenario.T = require_number(j, "T");
    cfg.scenario.x0 = require_number(j, "x0");
    cfg.scenario.xT = require_number(j, "xT");
    cfg.scenario.h_min = require_number(j, "h_min");
    cfg.scenario.h_max = require_number(j, "h_max");
    cfg.alpha = require_number(j, "alpha");

    if (j.contains("grid_points")) {
        if (!j["grid_points"].is_number_integer())
            throw std::invalid_argument("config: 'grid_points' must be an integer");
        cfg.grid_points = j["grid_points"].get<int>();
    }

    if (j.contains("experiments")) {
        if (!j["experiments"].is_array())
            throw std::invalid_argument("config: 'experiments' must be an array");
        for (const auto& item : j["experiments"]) {
            if (!item.is_string())
                throw std::invalid_argument("config: experiment names must be strings");
            cfg.experiments.insert(experiment_from_name(item.get<std::string>()));
        }
    } else {
        cfg.experiments = kAllExperiments;
    }

    if (j.contains("output_dir")) {
        if (!j["output_dir"].is_string())
            throw std::invalid_argument("config: 'output_dir' must be a string");
        cfg.output_dir = j["output_dir"].get<std::string>();
    }
    return cfg;
}

void validate_run_config(const RunConfig& cfg) {
    validate_scenario(cfg.scenario);
    if (!(cfg.alpha > 0.0) || cfg.alpha > 1.0)
        throw std::invalid_argument("config: alpha must lie in (0, 1]");
    if (cfg.grid_points < 100)
        throw std::invalid_argument("config: grid_points must be >= 100");
    if (cfg.experiments.empty())
        throw std::invalid_argument("config: no experiments requested");
}

}  // namespace harvest
