#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "moport/algorithms.hpp"
#include "moport/record.hpp"
#include "moport/stats.hpp"

namespace moport {

struct DatasetSpec {
    std::string name;
    std::string universe_path;
    std::string frontier_path;
};

/// Built-in benchmark registry: maps a dataset name to its files under a data
/// directory and its fixed hypervolume reference corner.
std::optional<DatasetSpec> dataset_by_name(const std::string& name, const std::string& data_dir);
std::optional<ObjectivePoint> default_hv_reference(const std::string& dataset_name);
std::vector<std::string> known_dataset_names();

enum class HvRefMode { FixedTable, EnsembleNadir };

struct HistogramSpec {
    double min = 0.0;
    double max = 1.0;
    int bins = 50;
};

struct ExperimentConfig {
    DatasetSpec dataset;
    std::vector<std::string> algorithms;
    std::map<std::string, MoeadConfig> algorithm_configs;
    int repetitions = 51;
    std::uint64_t base_seed = 1;
    HvRefMode hv_ref_mode = HvRefMode::FixedTable;
    std::optional<ObjectivePoint> hv_ref_override;
    std::string output_dir = "out";
    int threads = 0; // 0 = hardware concurrency
    bool trial_log = true;
    double long_trial_threshold = 0.2;
    std::vector<Index> snapshot_generations{1, 3, 5, 10, 50, 100};
    std::vector<Index> histogram_generations{1, 3, 10};
    HistogramSpec histogram;
};

/// The two benchmark protocols: exp1 compares the framework pipelines
/// {levy, dem, de, ga, nsga2}, exp2 the distribution variants
/// {levy, unif, norm, const} without polynomial mutation. Shared protocol:
/// N = 100, 1500 generations with early stop, T = 20, sigma = 0.9, n_r = 2,
/// 51 repetitions.
ExperimentConfig experiment_preset(const std::string& name);

/// Flat key/value JSON document; unknown keys are an error, and every
/// complaint names the offending field.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j,
                                             const std::string& data_dir = "data");
nlohmann::ordered_json experiment_config_to_json(const ExperimentConfig& cfg);

struct ExperimentResult {
    std::vector<RunRecord> records; // config order: per algorithm, then repetition
    ObjectivePoint hv_ref_used{};
};

/// Executes repetitions x algorithms seeded runs (seed = base_seed + rep),
/// possibly in parallel, and writes the result bundle: per-run records,
/// per-run front dumps, the aggregated stats grid and the plot-data files.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Aggregation helpers shared by run_experiment and the stats CLI.
std::vector<MetricSample> collect_metric_samples(const std::vector<RunRecord>& records);
std::vector<std::pair<std::string, Direction>> metric_directions();
std::string summary_csv(const std::vector<MetricSample>& samples,
                        const std::vector<std::string>& algorithm_order);
nlohmann::ordered_json summary_json(const std::vector<MetricSample>& samples,
                                    const std::vector<std::string>& algorithm_order);

/// Plot-data emission (CSV, headers always present, config echoed in leading
/// comment lines where the format is config-dependent).
void emit_plots(const ExperimentConfig& cfg, const std::vector<RunRecord>& records,
                const std::string& plot_dir);

/// Reads every runs/*.json record from a bundle directory, sorted by file
/// name.
std::vector<RunRecord> load_bundle(const std::string& bundle_dir);

std::string archive_csv(const std::vector<ObjectivePoint>& points);

} // namespace moport
