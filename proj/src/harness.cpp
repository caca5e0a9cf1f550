#include "moport/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace moport {

namespace fs = std::filesystem;

namespace {

std::string fmt(double v, const char* spec = "%.12g") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

struct DatasetEntry {
    const char* name;
    const char* universe;
    const char* frontier;
    ObjectivePoint hv_ref;
};

// Fixed hypervolume reference corners per dataset (return, risk).
constexpr DatasetEntry kDatasets[] = {
    {"hangseng", "port1.txt", "portef1.txt", {0.0026, 0.0048}},
    {"dax", "port2.txt", "portef2.txt", {0.0019, 0.0028}},
    {"ftse", "port3.txt", "portef3.txt", {0.0024, 0.0028}},
    {"sp", "port4.txt", "portef4.txt", {0.0018, 0.0031}},
    {"nikkei", "port5.txt", "portef5.txt", {-0.0026, 0.0017}},
};

MoeadConfig shared_protocol(Pipeline pipeline) {
    MoeadConfig cfg;
    cfg.pipeline = pipeline;
    cfg.population = 100;
    cfg.neighborhood = 20;
    cfg.select_neighborhood_prob = 0.9;
    cfg.max_replacements = 2;
    cfg.max_generations = 1500;
    cfg.early_stop_window = 100;
    cfg.early_stop_tol = 1e-5;
    cfg.op.eta_c = 20.0;
    cfg.op.eta_m = 20.0;
    return cfg;
}

} // namespace

std::optional<DatasetSpec> dataset_by_name(const std::string& name, const std::string& data_dir) {
    for (const auto& d : kDatasets) {
        if (name == d.name) {
            DatasetSpec spec;
            spec.name = d.name;
            spec.universe_path = (fs::path(data_dir) / d.universe).string();
            spec.frontier_path = (fs::path(data_dir) / d.frontier).string();
            return spec;
        }
    }
    return std::nullopt;
}

std::optional<ObjectivePoint> default_hv_reference(const std::string& dataset_name) {
    for (const auto& d : kDatasets) {
        if (dataset_name == d.name) return d.hv_ref;
    }
    return std::nullopt;
}

std::vector<std::string> known_dataset_names() {
    std::vector<std::string> names;
    for (const auto& d : kDatasets) names.emplace_back(d.name);
    return names;
}

ExperimentConfig experiment_preset(const std::string& name) {
    ExperimentConfig cfg;
    if (name == "exp1") {
        cfg.algorithms = {"levy", "dem", "de", "ga", "nsga2"};

        MoeadConfig levy = shared_protocol(Pipeline::Levy);
        levy.levy = {1e-5, 0.3};
        levy.mutation_rate_reciprocal = true;

        MoeadConfig dem = shared_protocol(Pipeline::Dem);
        dem.op.F = 1.3;
        dem.op.CR = 1.0;
        dem.mutation_rate_reciprocal = true;

        MoeadConfig de = shared_protocol(Pipeline::De);
        de.op.F = 1.3;
        de.op.CR = 1.0;

        MoeadConfig ga = shared_protocol(Pipeline::Ga);
        ga.op.CR = 0.7;
        ga.op.p_mut = 0.05;

        MoeadConfig nsga2 = shared_protocol(Pipeline::Nsga2);
        nsga2.op.CR = 0.7;
        nsga2.op.p_mut = 0.01;

        cfg.algorithm_configs = {
            {"levy", levy}, {"dem", dem}, {"de", de}, {"ga", ga}, {"nsga2", nsga2}};
    } else if (name == "exp2") {
        cfg.algorithms = {"levy", "unif", "norm", "const"};

        MoeadConfig levy = shared_protocol(Pipeline::Levy);
        levy.levy = {1e-5, 0.3};

        MoeadConfig unif = shared_protocol(Pipeline::Unif);
        unif.op.C = 1.0;

        MoeadConfig norm = shared_protocol(Pipeline::Norm);
        norm.op.C = 0.5;

        MoeadConfig cons = shared_protocol(Pipeline::Const);
        cons.op.F = 1.3;
        cons.op.CR = 1.0;

        cfg.algorithm_configs = {{"levy", levy}, {"unif", unif}, {"norm", norm}, {"const", cons}};
    } else {
        throw std::invalid_argument("unknown preset: " + name + " (expected exp1 or exp2)");
    }
    cfg.repetitions = 51;
    return cfg;
}

ExperimentConfig experiment_config_from_json(const nlohmann::json& j,
                                             const std::string& data_dir) {
    static const std::set<std::string> known_keys = {
        "dataset", "universe", "frontier", "preset", "algorithms", "params",
        "repetitions", "base_seed", "hv_ref_mode", "hv_ref", "out", "threads",
        "trial_log", "long_trial_threshold", "snapshot_generations",
        "histogram_generations", "histogram_min", "histogram_max", "histogram_bins",
        "max_generations", "early_stop_tol", "early_stop_window", "population"};
    for (const auto& [key, value] : j.items()) {
        if (!known_keys.contains(key)) {
            throw std::invalid_argument("config." + key + ": unknown key");
        }
    }

    ExperimentConfig cfg;
    if (j.contains("preset")) cfg = experiment_preset(j.at("preset").get<std::string>());

    if (j.contains("dataset")) {
        const auto name = j.at("dataset").get<std::string>();
        auto spec = dataset_by_name(name, data_dir);
        if (!spec) {
            throw std::invalid_argument("config.dataset: unknown dataset '" + name + "'");
        }
        cfg.dataset = *spec;
    }
    if (j.contains("universe")) cfg.dataset.universe_path = j.at("universe").get<std::string>();
    if (j.contains("frontier")) cfg.dataset.frontier_path = j.at("frontier").get<std::string>();
    if (cfg.dataset.name.empty()) cfg.dataset.name = "custom";

    if (j.contains("algorithms")) {
        cfg.algorithms = j.at("algorithms").get<std::vector<std::string>>();
    }
    for (const auto& id : cfg.algorithms) {
        if (!cfg.algorithm_configs.contains(id)) {
            MoeadConfig base = shared_protocol(pipeline_from_string(id));
            cfg.algorithm_configs.emplace(id, base);
        }
    }
    if (j.contains("params")) {
        for (const auto& [id, params] : j.at("params").items()) {
            if (std::find(cfg.algorithms.begin(), cfg.algorithms.end(), id) ==
                cfg.algorithms.end()) {
                throw std::invalid_argument("config.params." + id +
                                            ": not in the algorithms list");
            }
            nlohmann::json merged = config_to_json(cfg.algorithm_configs.at(id));
            merged.merge_patch(params);
            try {
                cfg.algorithm_configs.at(id) = config_from_json(merged);
            } catch (const std::exception& e) {
                throw std::invalid_argument("config.params." + id + ": " + e.what());
            }
        }
    }

    auto get = [&](const char* key, auto& target) {
        if (j.contains(key)) target = j.at(key).template get<std::decay_t<decltype(target)>>();
    };
    get("repetitions", cfg.repetitions);
    get("base_seed", cfg.base_seed);
    get("out", cfg.output_dir);
    get("threads", cfg.threads);
    get("trial_log", cfg.trial_log);
    get("long_trial_threshold", cfg.long_trial_threshold);
    get("snapshot_generations", cfg.snapshot_generations);
    get("histogram_generations", cfg.histogram_generations);
    get("histogram_min", cfg.histogram.min);
    get("histogram_max", cfg.histogram.max);
    get("histogram_bins", cfg.histogram.bins);

    if (j.contains("hv_ref_mode")) {
        const auto mode = j.at("hv_ref_mode").get<std::string>();
        if (mode == "table4-fixed") {
            cfg.hv_ref_mode = HvRefMode::FixedTable;
        } else if (mode == "ensemble-nadir") {
            cfg.hv_ref_mode = HvRefMode::EnsembleNadir;
        } else {
            throw std::invalid_argument(
                "config.hv_ref_mode: expected table4-fixed or ensemble-nadir");
        }
    }
    if (j.contains("hv_ref")) {
        const auto v = j.at("hv_ref").get<std::vector<double>>();
        if (v.size() != 2) {
            throw std::invalid_argument("config.hv_ref: expected [return, risk]");
        }
        cfg.hv_ref_override = ObjectivePoint{v[0], v[1]};
    }

    // Whole-experiment protocol overrides applied across every algorithm.
    for (auto& [id, acfg] : cfg.algorithm_configs) {
        if (j.contains("max_generations")) {
            acfg.max_generations = j.at("max_generations").get<Index>();
        }
        if (j.contains("early_stop_tol")) {
            acfg.early_stop_tol = j.at("early_stop_tol").get<double>();
        }
        if (j.contains("early_stop_window")) {
            acfg.early_stop_window = j.at("early_stop_window").get<int>();
        }
        if (j.contains("population")) acfg.population = j.at("population").get<Index>();
    }

    if (cfg.repetitions < 1) throw std::invalid_argument("config.repetitions: must be >= 1");
    if (cfg.algorithms.empty()) throw std::invalid_argument("config.algorithms: empty");
    for (const auto& id : cfg.algorithms) {
        pipeline_from_string(id); // validates the id
    }
    return cfg;
}

nlohmann::ordered_json experiment_config_to_json(const ExperimentConfig& cfg) {
    nlohmann::ordered_json j;
    j["dataset"] = cfg.dataset.name;
    j["universe"] = cfg.dataset.universe_path;
    j["frontier"] = cfg.dataset.frontier_path;
    j["algorithms"] = cfg.algorithms;
    nlohmann::ordered_json params;
    for (const auto& id : cfg.algorithms) {
        params[id] = config_to_json(cfg.algorithm_configs.at(id));
    }
    j["params"] = params;
    j["repetitions"] = cfg.repetitions;
    j["base_seed"] = cfg.base_seed;
    j["hv_ref_mode"] =
        cfg.hv_ref_mode == HvRefMode::FixedTable ? "table4-fixed" : "ensemble-nadir";
    if (cfg.hv_ref_override) {
        j["hv_ref"] = {cfg.hv_ref_override->ret, cfg.hv_ref_override->risk};
    }
    j["out"] = cfg.output_dir;
    j["threads"] = cfg.threads;
    j["trial_log"] = cfg.trial_log;
    j["long_trial_threshold"] = cfg.long_trial_threshold;
    j["snapshot_generations"] = cfg.snapshot_generations;
    j["histogram_generations"] = cfg.histogram_generations;
    j["histogram_min"] = cfg.histogram.min;
    j["histogram_max"] = cfg.histogram.max;
    j["histogram_bins"] = cfg.histogram.bins;
    return j;
}

std::vector<MetricSample> collect_metric_samples(const std::vector<RunRecord>& records) {
    // Keyed by (algorithm, metric); dataset is uniform within a bundle but
    // kept on the sample. Algorithm order follows first appearance.
    std::vector<MetricSample> samples;
    auto upsert = [&](const RunRecord& r, const std::string& metric, double value) {
        for (auto& s : samples) {
            if (s.algorithm == r.algorithm && s.metric == metric && s.dataset == r.dataset) {
                s.values.push_back(value);
                return;
            }
        }
        samples.push_back({r.algorithm, r.dataset, metric, {value}});
    };
    for (const auto& r : records) {
        upsert(r, "gd", r.metrics.gd);
        if (r.metrics.spacing) upsert(r, "s", *r.metrics.spacing);
        upsert(r, "ms", r.metrics.maximum_spread);
        if (r.metrics.delta_spread) upsert(r, "delta", *r.metrics.delta_spread);
        upsert(r, "igd", r.metrics.igd);
        upsert(r, "hv", r.metrics.hypervolume);
    }
    return samples;
}

std::vector<std::pair<std::string, Direction>> metric_directions() {
    return {{"gd", Direction::LowerBetter},   {"s", Direction::LowerBetter},
            {"ms", Direction::HigherBetter},  {"delta", Direction::LowerBetter},
            {"igd", Direction::LowerBetter},  {"hv", Direction::HigherBetter}};
}

namespace {

const MetricSample* find_sample(const std::vector<MetricSample>& samples,
                                const std::string& algorithm, const std::string& metric) {
    for (const auto& s : samples) {
        if (s.algorithm == algorithm && s.metric == metric) return &s;
    }
    return nullptr;
}

// Reorders samples to (metric order, algorithm order) so that winner
// tie-breaking and output bytes do not depend on how the records were
// collected.
std::vector<MetricSample> canonical_samples(const std::vector<MetricSample>& samples,
                                            const std::vector<std::string>& algorithm_order) {
    std::vector<MetricSample> out;
    for (const auto& [metric, dir] : metric_directions()) {
        for (const auto& a : algorithm_order) {
            if (const MetricSample* s = find_sample(samples, a, metric)) out.push_back(*s);
        }
    }
    return out;
}

} // namespace

std::string summary_csv(const std::vector<MetricSample>& raw_samples,
                        const std::vector<std::string>& algorithm_order) {
    const auto samples = canonical_samples(raw_samples, algorithm_order);
    const auto directions = metric_directions();
    const auto annotations = mark_winners(samples, directions, 0.05);

    std::ostringstream out;
    out << "metric,stat";
    for (const auto& a : algorithm_order) out << "," << a;
    out << "\n";
    for (const auto& [metric, dir] : directions) {
        bool any = false;
        for (const auto& a : algorithm_order) {
            if (find_sample(samples, a, metric)) any = true;
        }
        if (!any) continue;

        const CellAnnotation* ann = nullptr;
        for (const auto& c : annotations) {
            if (c.metric == metric) ann = &c;
        }

        for (const char* stat : {"best", "median", "std"}) {
            out << metric << "," << stat;
            for (const auto& a : algorithm_order) {
                const MetricSample* s = find_sample(samples, a, metric);
                out << ",";
                if (!s) continue;
                const Summary sum = summarize(*s, dir);
                out << fmt(std::string(stat) == "best"
                               ? sum.best
                               : (std::string(stat) == "median" ? sum.median : sum.std_dev));
            }
            out << "\n";
        }
        out << metric << ",winner";
        for (const auto& a : algorithm_order) {
            out << ",";
            if (ann && ann->best_algorithm == a) {
                out << (ann->significant ? "best-significant" : "best");
            }
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json summary_json(const std::vector<MetricSample>& raw_samples,
                                    const std::vector<std::string>& algorithm_order) {
    const auto samples = canonical_samples(raw_samples, algorithm_order);
    const auto directions = metric_directions();
    const auto annotations = mark_winners(samples, directions, 0.05);

    nlohmann::ordered_json j;
    j["algorithms"] = algorithm_order;
    nlohmann::ordered_json grid;
    for (const auto& [metric, dir] : directions) {
        nlohmann::ordered_json cell;
        for (const auto& a : algorithm_order) {
            const MetricSample* s = find_sample(samples, a, metric);
            if (!s) continue;
            const Summary sum = summarize(*s, dir);
            cell[a] = {{"best", sum.best}, {"median", sum.median}, {"std", sum.std_dev}};
        }
        if (cell.empty()) continue;
        for (const auto& c : annotations) {
            if (c.metric == metric) {
                cell["winner"] = c.best_algorithm;
                cell["second"] = c.second_algorithm;
                cell["p_winner_vs_second"] = c.p_best_vs_second;
                cell["significant"] = c.significant;
            }
        }
        grid[metric] = cell;
    }
    j["grid"] = grid;
    j["std_divisor"] = "n";
    j["median"] = "middle order statistic";
    return j;
}

std::string archive_csv(const std::vector<ObjectivePoint>& points) {
    std::ostringstream out;
    out << "return,risk\n";
    for (const auto& p : points) {
        out << fmt(p.ret) << "," << fmt(p.risk) << "\n";
    }
    return out.str();
}

void emit_plots(const ExperimentConfig& cfg, const std::vector<RunRecord>& records,
                const std::string& plot_dir) {
    fs::create_directories(plot_dir);

    std::ostringstream igd;
    igd << "algorithm,rep,generation,igd\n";
    std::ostringstream pop;
    pop << "algorithm,rep,generation,return,risk\n";

    std::ostringstream hist;
    hist << "# histogram_min=" << fmt(cfg.histogram.min)
         << " histogram_max=" << fmt(cfg.histogram.max) << " bins=" << cfg.histogram.bins
         << "\n";
    hist << "algorithm,rep,generation,bin_lo,bin_hi,trials,successful_trials\n";

    std::ostringstream longc;
    longc << "# long_trial_threshold=" << fmt(cfg.long_trial_threshold) << "\n";
    longc << "algorithm,rep,generation,successful_long_trials\n";

    // Repetition index recovered from the seed layout (seed = base + rep).
    for (const auto& r : records) {
        const std::uint64_t rep = r.seed - cfg.base_seed;
        for (std::size_t g = 0; g < r.igd_trace.size(); ++g) {
            igd << r.algorithm << "," << rep << "," << g << "," << fmt(r.igd_trace[g]) << "\n";
        }
        for (const auto& [gen, pts] : r.population_snapshots) {
            for (const auto& p : pts) {
                pop << r.algorithm << "," << rep << "," << gen << "," << fmt(p.ret) << ","
                    << fmt(p.risk) << "\n";
            }
        }

        if (!r.trial_log.empty()) {
            const double width = (cfg.histogram.max - cfg.histogram.min) /
                                 static_cast<double>(cfg.histogram.bins);
            for (Index gen : cfg.histogram_generations) {
                std::vector<int> trials(static_cast<std::size_t>(cfg.histogram.bins), 0);
                std::vector<int> successes(static_cast<std::size_t>(cfg.histogram.bins), 0);
                bool seen = false;
                for (const auto& t : r.trial_log) {
                    if (t.generation != gen) continue;
                    seen = true;
                    int bin = static_cast<int>((t.step_length - cfg.histogram.min) / width);
                    bin = std::clamp(bin, 0, cfg.histogram.bins - 1);
                    ++trials[static_cast<std::size_t>(bin)];
                    if (t.successes > 0) ++successes[static_cast<std::size_t>(bin)];
                }
                if (!seen) continue;
                for (int b = 0; b < cfg.histogram.bins; ++b) {
                    hist << r.algorithm << "," << rep << "," << gen << ","
                         << fmt(cfg.histogram.min + b * width) << ","
                         << fmt(cfg.histogram.min + (b + 1) * width) << ","
                         << trials[static_cast<std::size_t>(b)] << ","
                         << successes[static_cast<std::size_t>(b)] << "\n";
                }
            }

            std::map<Index, int> counts;
            for (const auto& t : r.trial_log) {
                if (t.successes > 0 && t.step_length > cfg.long_trial_threshold) {
                    ++counts[t.generation];
                }
            }
            for (Index g = 1; g <= r.generations_run; ++g) {
                const auto it = counts.find(g);
                longc << r.algorithm << "," << rep << "," << g << ","
                      << (it == counts.end() ? 0 : it->second) << "\n";
            }
        }
    }

    write_file(fs::path(plot_dir) / "igd_by_generation.csv", igd.str());
    write_file(fs::path(plot_dir) / "population_objectives.csv", pop.str());
    write_file(fs::path(plot_dir) / "step_length_histogram.csv", hist.str());
    write_file(fs::path(plot_dir) / "long_trial_counts_by_generation.csv", longc.str());
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.dataset.universe_path.empty() || cfg.dataset.frontier_path.empty()) {
        throw std::invalid_argument("config.dataset: universe and frontier paths required");
    }
    const AssetUniverse universe = load_universe(cfg.dataset.universe_path);
    const ReferenceFrontier frontier = load_frontier(cfg.dataset.frontier_path);

    ObjectivePoint hv_ref{0.0, 1.0};
    if (cfg.hv_ref_override) {
        hv_ref = *cfg.hv_ref_override;
    } else if (auto table = default_hv_reference(cfg.dataset.name)) {
        hv_ref = *table;
    } else {
        // No registry entry: fall back to the frontier's dominated corner.
        double lo_ret = frontier.points.front().ret, hi_risk = frontier.points.front().risk;
        for (const auto& p : frontier.points) {
            lo_ret = std::min(lo_ret, p.ret);
            hi_risk = std::max(hi_risk, p.risk);
        }
        hv_ref = {lo_ret, hi_risk};
    }

    struct Task {
        std::string algorithm;
        MoeadConfig config;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (const auto& id : cfg.algorithms) {
        const auto it = cfg.algorithm_configs.find(id);
        if (it == cfg.algorithm_configs.end()) {
            throw std::invalid_argument("config.params." + id + ": missing parameters");
        }
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
            tasks.push_back({id, it->second, cfg.base_seed + static_cast<std::uint64_t>(rep)});
        }
    }

    RunOptions options;
    options.snapshot_generations = cfg.snapshot_generations;
    options.hv_ref = HvReference{hv_ref};
    options.record_trials = cfg.trial_log;

    ExperimentResult result;
    result.hv_ref_used = hv_ref;
    result.records.resize(tasks.size());

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads =
        cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                        : std::min<unsigned>(hw, static_cast<unsigned>(tasks.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (;;) {
                    const std::size_t k = next.fetch_add(1);
                    if (k >= tasks.size()) break;
                    const Task& task = tasks[k];
                    result.records[k] = run(universe, frontier, task.config, options, task.seed,
                                            cfg.dataset.name);
                }
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    if (cfg.hv_ref_mode == HvRefMode::EnsembleNadir && !cfg.hv_ref_override) {
        // Nadir over every algorithm's final non-dominated set.
        ObjectivePoint nadir = result.records.front().final_front.points.front();
        for (const auto& r : result.records) {
            for (const auto& p : r.final_front.points) {
                nadir.ret = std::min(nadir.ret, p.ret);
                nadir.risk = std::max(nadir.risk, p.risk);
            }
        }
        result.hv_ref_used = nadir;
        for (auto& r : result.records) {
            r.metrics.hypervolume = hypervolume(r.final_front, HvReference{nadir});
        }
    }

    // Bundle layout: config echo, per-run records and fronts, aggregated
    // grid, plot data.
    const fs::path out_dir(cfg.output_dir);
    fs::create_directories(out_dir / "runs");
    fs::create_directories(out_dir / "fronts");

    auto config_echo = experiment_config_to_json(cfg);
    config_echo["hv_ref_used"] = {result.hv_ref_used.ret, result.hv_ref_used.risk};
    write_file(out_dir / "config.json", config_echo.dump(2) + "\n");

    for (std::size_t k = 0; k < tasks.size(); ++k) {
        const auto& r = result.records[k];
        const std::uint64_t rep = r.seed - cfg.base_seed;
        const std::string stem =
            cfg.dataset.name + "_" + r.algorithm + "_rep" + std::to_string(rep);
        write_file(out_dir / "runs" / (stem + ".json"), record_to_json(r).dump() + "\n");
        write_file(out_dir / "fronts" / (stem + ".csv"), archive_csv(r.final_front.points));
    }

    const auto samples = collect_metric_samples(result.records);
    write_file(out_dir / "summary.csv", summary_csv(samples, cfg.algorithms));
    write_file(out_dir / "summary.json", summary_json(samples, cfg.algorithms).dump(2) + "\n");

    emit_plots(cfg, result.records, (out_dir / "plots").string());
    return result;
}

std::vector<RunRecord> load_bundle(const std::string& bundle_dir) {
    const fs::path runs = fs::path(bundle_dir) / "runs";
    if (!fs::exists(runs)) {
        throw std::runtime_error("bundle has no runs/ directory: " + bundle_dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(runs)) {
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> records;
    records.reserve(files.size());
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw std::runtime_error("cannot read " + f.string());
        nlohmann::json j;
        in >> j;
        records.push_back(record_from_json(j));
    }
    return records;
}

} // namespace moport
