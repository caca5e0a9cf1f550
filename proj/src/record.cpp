#include "moport/record.hpp"

#include <stdexcept>

namespace moport {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json optional_to_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::optional<double> optional_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<double>();
}

} // namespace

ordered_json config_to_json(const MoeadConfig& cfg) {
    ordered_json j;
    j["pipeline"] = to_string(cfg.pipeline);
    j["population"] = cfg.population;
    j["neighborhood"] = cfg.neighborhood;
    j["select_neighborhood_prob"] = cfg.select_neighborhood_prob;
    j["max_replacements"] = cfg.max_replacements;
    j["max_generations"] = cfg.max_generations;
    j["early_stop_window"] = cfg.early_stop_window;
    j["early_stop_tol"] = cfg.early_stop_tol;
    j["F"] = cfg.op.F;
    j["CR"] = cfg.op.CR;
    j["C"] = cfg.op.C;
    j["eta_c"] = cfg.op.eta_c;
    j["eta_m"] = cfg.op.eta_m;
    if (cfg.mutation_rate_reciprocal) {
        j["p_mut"] = "1/n";
    } else {
        j["p_mut"] = cfg.op.p_mut;
    }
    j["alpha0"] = cfg.levy.alpha0;
    j["beta"] = cfg.levy.beta;
    return j;
}

MoeadConfig config_from_json(const json& j) {
    MoeadConfig cfg;
    auto get = [&](const char* key, auto& target) {
        if (j.contains(key)) target = j.at(key).template get<std::decay_t<decltype(target)>>();
    };
    if (j.contains("pipeline")) cfg.pipeline = pipeline_from_string(j.at("pipeline"));
    get("population", cfg.population);
    get("neighborhood", cfg.neighborhood);
    get("select_neighborhood_prob", cfg.select_neighborhood_prob);
    get("max_replacements", cfg.max_replacements);
    get("max_generations", cfg.max_generations);
    get("early_stop_window", cfg.early_stop_window);
    get("early_stop_tol", cfg.early_stop_tol);
    get("F", cfg.op.F);
    get("CR", cfg.op.CR);
    get("C", cfg.op.C);
    get("eta_c", cfg.op.eta_c);
    get("eta_m", cfg.op.eta_m);
    if (j.contains("p_mut")) {
        const auto& p = j.at("p_mut");
        if (p.is_string()) {
            if (p.get<std::string>() != "1/n") {
                throw std::invalid_argument("config.p_mut: expected a number or \"1/n\"");
            }
            cfg.mutation_rate_reciprocal = true;
            cfg.op.p_mut = 0.0;
        } else {
            cfg.mutation_rate_reciprocal = false;
            cfg.op.p_mut = p.get<double>();
        }
    }
    get("alpha0", cfg.levy.alpha0);
    get("beta", cfg.levy.beta);
    return cfg;
}

ordered_json record_to_json(const RunRecord& record) {
    ordered_json j;
    j["algorithm"] = record.algorithm;
    j["dataset"] = record.dataset;
    j["seed"] = record.seed;
    j["config"] = config_to_json(record.config);
    j["generations_run"] = record.generations_run;
    j["early_stopped"] = record.early_stopped;
    j["igd_trace"] = record.igd_trace;

    ordered_json metrics;
    metrics["gd"] = record.metrics.gd;
    metrics["s"] = optional_to_json(record.metrics.spacing);
    metrics["ms"] = record.metrics.maximum_spread;
    metrics["delta"] = optional_to_json(record.metrics.delta_spread);
    metrics["igd"] = record.metrics.igd;
    metrics["hv"] = record.metrics.hypervolume;
    j["metrics"] = metrics;

    auto points_to_json = [](const std::vector<ObjectivePoint>& pts) {
        ordered_json arr = ordered_json::array();
        for (const auto& p : pts) arr.push_back({p.ret, p.risk});
        return arr;
    };
    j["final_front"] = points_to_json(record.final_front.points);

    ordered_json pop = ordered_json::array();
    for (const auto& s : record.final_population) {
        ordered_json entry;
        entry["return"] = s.objectives.ret;
        entry["risk"] = s.objectives.risk;
        entry["weights"] = std::vector<double>(s.weights.begin(), s.weights.end());
        pop.push_back(std::move(entry));
    }
    j["final_population"] = pop;

    ordered_json snaps = ordered_json::array();
    for (const auto& [gen, pts] : record.population_snapshots) {
        ordered_json s;
        s["generation"] = gen;
        s["points"] = points_to_json(pts);
        snaps.push_back(std::move(s));
    }
    j["population_snapshots"] = snaps;

    ordered_json trials = ordered_json::array();
    for (const auto& t : record.trial_log) {
        trials.push_back({t.generation, t.step_length, t.successes});
    }
    j["trial_log"] = trials;

    j["wall_time_sec"] = record.wall_time_sec;
    return j;
}

RunRecord record_from_json(const json& j) {
    RunRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.dataset = j.at("dataset").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.config = config_from_json(j.at("config"));
    r.generations_run = j.at("generations_run").get<Index>();
    r.early_stopped = j.at("early_stopped").get<bool>();
    r.igd_trace = j.at("igd_trace").get<std::vector<double>>();

    const auto& m = j.at("metrics");
    r.metrics.gd = m.at("gd").get<double>();
    r.metrics.spacing = optional_from_json(m.at("s"));
    r.metrics.maximum_spread = m.at("ms").get<double>();
    r.metrics.delta_spread = optional_from_json(m.at("delta"));
    r.metrics.igd = m.at("igd").get<double>();
    r.metrics.hypervolume = m.at("hv").get<double>();

    auto points_from_json = [](const json& arr) {
        std::vector<ObjectivePoint> pts;
        pts.reserve(arr.size());
        for (const auto& p : arr) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
        return pts;
    };
    r.final_front.points = points_from_json(j.at("final_front"));
    r.final_front.provenance = "final";

    for (const auto& entry : j.at("final_population")) {
        PortfolioSolution s;
        const auto w = entry.at("weights").get<std::vector<double>>();
        s.weights = Eigen::Map<const Vector>(w.data(), static_cast<Index>(w.size()));
        s.objectives = {entry.at("return").get<double>(), entry.at("risk").get<double>()};
        r.final_population.push_back(std::move(s));
    }

    for (const auto& s : j.at("population_snapshots")) {
        r.population_snapshots.emplace_back(s.at("generation").get<Index>(),
                                            points_from_json(s.at("points")));
    }

    for (const auto& t : j.at("trial_log")) {
        r.trial_log.push_back(
            {t.at(0).get<Index>(), t.at(1).get<double>(), t.at(2).get<int>()});
    }

    r.wall_time_sec = j.at("wall_time_sec").get<double>();
    return r;
}

} // namespace moport
