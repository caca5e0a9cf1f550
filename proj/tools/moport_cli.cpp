// Command-line front end: `run` executes a benchmark experiment, `metrics`
// scores a front dump against a reference frontier, `stats` re-aggregates a
// result bundle, `dump-universe` prints a parsed dataset as JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "moport/harness.hpp"

namespace {

using namespace moport;

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

std::vector<ObjectivePoint> parse_front_csv(std::istream& in) {
    std::vector<ObjectivePoint> points;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (first) {
            first = false;
            if (line.rfind("return", 0) == 0) continue; // header
        }
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double ret = 0, risk = 0;
        if (!(ls >> ret >> risk)) throw std::runtime_error("front: malformed line: " + line);
        points.push_back({ret, risk});
    }
    if (points.empty()) throw std::runtime_error("front: no points");
    return points;
}

int cmd_run(const std::string& config_path, const std::string& preset,
            const std::string& dataset, const std::string& data_dir, int reps, long long seed,
            const std::string& out, long long max_gen, int threads) {
    nlohmann::json doc = nlohmann::json::object();
    if (!config_path.empty()) doc = load_json_file(config_path);
    // Flag overrides beat file values; the preset provides the base line.
    if (!preset.empty()) doc["preset"] = preset;
    if (!dataset.empty()) doc["dataset"] = dataset;
    if (reps > 0) doc["repetitions"] = reps;
    if (seed >= 0) doc["base_seed"] = seed;
    if (!out.empty()) doc["out"] = out;
    if (max_gen >= 0) doc["max_generations"] = max_gen;
    if (threads > 0) doc["threads"] = threads;

    const ExperimentConfig cfg = experiment_config_from_json(doc, data_dir);
    const ExperimentResult result = run_experiment(cfg);
    std::cout << "wrote " << result.records.size() << " runs to " << cfg.output_dir << "\n";
    return 0;
}

int cmd_metrics(const std::string& front_path, const std::string& frontier_path,
                const std::string& hv_ref) {
    std::ifstream front_in(front_path);
    if (!front_in) throw std::runtime_error("cannot open " + front_path);
    const auto points = parse_front_csv(front_in);
    const ReferenceFrontier frontier = load_frontier(frontier_path);

    double r1 = 0, r2 = 0;
    if (std::sscanf(hv_ref.c_str(), "%lf,%lf", &r1, &r2) != 2) {
        throw std::runtime_error("--hv-ref expects RETURN,RISK");
    }

    const FrontArchive archive = nondominated_filter(points, front_path);
    const MetricSet m = compute_metrics(archive, frontier.points, HvReference{{r1, r2}});

    nlohmann::ordered_json j;
    j["points"] = points.size();
    j["nondominated"] = archive.points.size();
    j["gd"] = m.gd;
    j["s"] = m.spacing ? nlohmann::json(*m.spacing) : nlohmann::json(nullptr);
    j["ms"] = m.maximum_spread;
    j["delta"] = m.delta_spread ? nlohmann::json(*m.delta_spread) : nlohmann::json(nullptr);
    j["igd"] = m.igd;
    j["hv"] = m.hypervolume;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_stats(const std::string& bundle_dir) {
    const auto records = load_bundle(bundle_dir);
    if (records.empty()) throw std::runtime_error("bundle has no runs: " + bundle_dir);
    const auto config = load_json_file(bundle_dir + "/config.json");
    const auto algorithms = config.at("algorithms").get<std::vector<std::string>>();
    const auto samples = collect_metric_samples(records);
    std::cout << summary_csv(samples, algorithms);
    return 0;
}

int cmd_dump_universe(const std::string& path) {
    const AssetUniverse u = load_universe(path);
    std::cout << universe_to_json(u).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-objective portfolio optimization benchmark toolkit"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "Run a benchmark experiment");
    std::string config_path, preset, dataset, out, data_dir = "data";
    int reps = 0, threads = 0;
    long long seed = -1, max_gen = -1;
    run_cmd->add_option("--config", config_path, "JSON config file");
    run_cmd->add_option("--preset", preset, "exp1 or exp2");
    run_cmd->add_option("--dataset", dataset, "hangseng, dax, ftse, sp or nikkei");
    run_cmd->add_option("--data-dir", data_dir, "benchmark data directory");
    run_cmd->add_option("--reps", reps, "repetitions");
    run_cmd->add_option("--seed", seed, "base seed");
    run_cmd->add_option("--out", out, "output directory");
    run_cmd->add_option("--max-gen", max_gen, "generation budget");
    run_cmd->add_option("--threads", threads, "worker threads (0 = auto)");

    auto* metrics_cmd = app.add_subcommand("metrics", "Score a front CSV against a frontier");
    std::string front_path, frontier_path, hv_ref = "0,1";
    metrics_cmd->add_option("--front", front_path, "front CSV (return,risk)")->required();
    metrics_cmd->add_option("--frontier", frontier_path, "reference frontier file")->required();
    metrics_cmd->add_option("--hv-ref", hv_ref, "hypervolume reference RETURN,RISK");

    auto* stats_cmd = app.add_subcommand("stats", "Aggregate a result bundle");
    std::string bundle_dir;
    stats_cmd->add_option("--bundle", bundle_dir, "bundle directory")->required();

    auto* dump_cmd = app.add_subcommand("dump-universe", "Print a parsed universe as JSON");
    std::string universe_path;
    dump_cmd->add_option("file", universe_path, "universe file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            return cmd_run(config_path, preset, dataset, data_dir, reps, seed, out, max_gen,
                           threads);
        }
        if (metrics_cmd->parsed()) return cmd_metrics(front_path, frontier_path, hv_ref);
        if (stats_cmd->parsed()) return cmd_stats(bundle_dir);
        if (dump_cmd->parsed()) return cmd_dump_universe(universe_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
