#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "moport/dataset.hpp"
#include "moport/metrics.hpp"
#include "moport/operators.hpp"
#include "moport/portfolio.hpp"
#include "moport/rng.hpp"
#include "moport/scalarization.hpp"

namespace moport {

/// The reproduction pipelines. The first seven run on the shared MOEA/D
/// framework and differ only in how an offspring is produced; nsga2 is the
/// domination-based baseline.
enum class Pipeline { Levy, Dem, De, Ga, Unif, Norm, Const, Nsga2 };

std::string to_string(Pipeline p);
Pipeline pipeline_from_string(const std::string& name);

struct MoeadConfig {
    Pipeline pipeline = Pipeline::Levy;
    Index population = 100;               // N
    int neighborhood = 20;                // T
    double select_neighborhood_prob = 0.9; // sigma
    int max_replacements = 2;             // n_r
    Index max_generations = 1500;
    int early_stop_window = 100;
    double early_stop_tol = 1e-5;         // <= 0 disables early stopping
    OperatorConfig op;
    LevyParams levy;
    bool mutation_rate_reciprocal = false; // per-gene rate 1/n, fixed at run start

    friend bool operator==(const MoeadConfig&, const MoeadConfig&) = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const MoeadConfig& cfg);

struct TrialLogEntry {
    Index generation = 0;
    double step_length = 0.0; // ||repaired offspring - base parent||_2
    int successes = 0;        // pool slots replaced by this offspring, <= n_r

    friend bool operator==(const TrialLogEntry&, const TrialLogEntry&) = default;
};

struct RunState {
    RunState(Index pop_size, int neighborhood, std::uint64_t seed)
        : ctx(pop_size, neighborhood), rng(seed) {}

    std::vector<PortfolioSolution> population;
    ScalarizationContext ctx;
    Index generation = 0;
    Rng rng;
    std::vector<TrialLogEntry> trial_log;
};

struct GenerationStats {
    int replacements = 0;
    bool context_changed = false;
};

/// Population initialization shared by all pipelines; seeds the
/// scalarization context from the initial objective values.
RunState make_initial_state(const AssetUniverse& universe, const MoeadConfig& cfg,
                            std::uint64_t seed);

/// One MOEA/D generation: for each subproblem, mate from the neighborhood
/// (or, with probability 1 - sigma, the whole population), reproduce with the
/// configured pipeline, repair, update extremes, then replace at most n_r
/// pool members under the boundary-intersection Tchebycheff value.
GenerationStats moead_generation(RunState& state, const MoeadConfig& cfg,
                                 const AssetUniverse& universe);

/// One NSGA-II generation: binary-tournament mating on (rank, crowding), SBX
/// plus polynomial mutation, repair, then environmental selection of the best
/// N from parents and offspring.
void nsga2_generation(RunState& state, const MoeadConfig& cfg, const AssetUniverse& universe);

struct RunOptions {
    std::vector<Index> snapshot_generations{1, 3, 5, 10, 50, 100};
    HvReference hv_ref{{0.0, 1.0}};
    bool record_trials = true;
};

/// Everything a finished run leaves behind. Identical (seed, config) pairs
/// produce identical records except for wall_time_sec.
struct RunRecord {
    std::string algorithm;
    std::string dataset;
    std::uint64_t seed = 0;
    MoeadConfig config;
    std::vector<double> igd_trace; // entry g = IGD after generation g; entry 0 = initial
    FrontArchive final_front;
    std::vector<PortfolioSolution> final_population;
    MetricSet metrics;
    std::vector<TrialLogEntry> trial_log;
    std::vector<std::pair<Index, std::vector<ObjectivePoint>>> population_snapshots;
    Index generations_run = 0;
    bool early_stopped = false;
    double wall_time_sec = 0.0;
};

/// Runs one seeded optimization to completion: generations until the budget
/// or until the IGD trace varies by no more than early_stop_tol across the
/// trailing early_stop_window generations.
RunRecord run(const AssetUniverse& universe, const ReferenceFrontier& frontier,
              const MoeadConfig& cfg, const RunOptions& options, std::uint64_t seed,
              const std::string& dataset_name = {});

} // namespace moport
