#include "moport/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "moport/nsga2.hpp"

namespace moport {

std::string to_string(Pipeline p) {
    switch (p) {
        case Pipeline::Levy: return "levy";
        case Pipeline::Dem: return "dem";
        case Pipeline::De: return "de";
        case Pipeline::Ga: return "ga";
        case Pipeline::Unif: return "unif";
        case Pipeline::Norm: return "norm";
        case Pipeline::Const: return "const";
        case Pipeline::Nsga2: return "nsga2";
    }
    return "?";
}

Pipeline pipeline_from_string(const std::string& name) {
    if (name == "levy") return Pipeline::Levy;
    if (name == "dem") return Pipeline::Dem;
    if (name == "de") return Pipeline::De;
    if (name == "ga") return Pipeline::Ga;
    if (name == "unif") return Pipeline::Unif;
    if (name == "norm") return Pipeline::Norm;
    if (name == "const") return Pipeline::Const;
    if (name == "nsga2") return Pipeline::Nsga2;
    throw std::invalid_argument("unknown pipeline id: " + name);
}

void validate(const MoeadConfig& cfg) {
    if (cfg.population < 2) throw std::invalid_argument("population: must be >= 2");
    if (cfg.neighborhood < 1 || cfg.neighborhood > cfg.population) {
        throw std::invalid_argument("neighborhood: T must be in [1, N]");
    }
    if (cfg.select_neighborhood_prob < 0.0 || cfg.select_neighborhood_prob > 1.0) {
        throw std::invalid_argument("select_neighborhood_prob: sigma must be in [0, 1]");
    }
    if (cfg.max_replacements < 1) throw std::invalid_argument("max_replacements: n_r must be >= 1");
    if (cfg.max_generations < 0) throw std::invalid_argument("max_generations: must be >= 0");
    if (cfg.op.CR < 0.0 || cfg.op.CR > 1.0) throw std::invalid_argument("op.CR: must be in [0, 1]");
    if (cfg.op.p_mut < 0.0 || cfg.op.p_mut > 1.0) {
        throw std::invalid_argument("op.p_mut: must be in [0, 1]");
    }
    if (cfg.op.F < 0.0 || cfg.op.C < 0.0 || cfg.op.eta_c < 0.0 || cfg.op.eta_m < 0.0) {
        throw std::invalid_argument("op: F, C and eta must be >= 0");
    }
    if (cfg.levy.alpha0 <= 0.0) throw std::invalid_argument("levy.alpha0: must be > 0");
    if (cfg.levy.beta < 0.3 || cfg.levy.beta > 1.99) {
        throw std::invalid_argument("levy.beta: must be in [0.3, 1.99]");
    }
}

RunState make_initial_state(const AssetUniverse& universe, const MoeadConfig& cfg,
                            std::uint64_t seed) {
    validate(cfg);
    RunState state(cfg.population, cfg.neighborhood, seed);
    state.population.reserve(static_cast<std::size_t>(cfg.population));
    for (Index i = 0; i < cfg.population; ++i) {
        state.population.push_back(random_solution(universe.n, universe, state.rng));
    }
    std::vector<ObjectivePoint> objectives;
    objectives.reserve(state.population.size());
    for (const auto& s : state.population) objectives.push_back(s.objectives);
    state.ctx.initialize(objectives);
    return state;
}

namespace {

double effective_p_mut(const MoeadConfig& cfg, Index n) {
    return cfg.mutation_rate_reciprocal ? 1.0 / static_cast<double>(n) : cfg.op.p_mut;
}

Vector reproduce(RunState& state, const MoeadConfig& cfg, const std::vector<int>& pool, int i) {
    const auto& pop = state.population;
    auto& rng = state.rng;
    const Index n = pop.front().weights.size();
    const double p_mut = effective_p_mut(cfg, n);

    switch (cfg.pipeline) {
        case Pipeline::Levy: {
            const auto [a, j] = select_curr_plus_random(i, pool, rng);
            Vector y = levy_mutation(pop[static_cast<std::size_t>(a)].weights,
                                     pop[static_cast<std::size_t>(j)].weights, cfg.levy, rng);
            if (p_mut > 0.0) y = polynomial_mutation(y, p_mut, cfg.op.eta_m, rng);
            return y;
        }
        case Pipeline::Dem:
        case Pipeline::De:
        case Pipeline::Const: {
            const auto [a, j, k] = select_three_random(i, pool, rng);
            Vector y = de_mutation(pop[static_cast<std::size_t>(a)].weights,
                                   pop[static_cast<std::size_t>(j)].weights,
                                   pop[static_cast<std::size_t>(k)].weights, cfg.op.F, cfg.op.CR,
                                   rng);
            if (cfg.pipeline == Pipeline::Dem && p_mut > 0.0) {
                y = polynomial_mutation(y, p_mut, cfg.op.eta_m, rng);
            }
            return y;
        }
        case Pipeline::Unif:
        case Pipeline::Norm: {
            const auto [a, j, k] = select_three_random(i, pool, rng);
            const DiffDist dist =
                cfg.pipeline == Pipeline::Unif ? DiffDist::Uniform : DiffDist::Normal;
            return scaled_diff_mutation(pop[static_cast<std::size_t>(a)].weights,
                                        pop[static_cast<std::size_t>(j)].weights,
                                        pop[static_cast<std::size_t>(k)].weights, cfg.op.C, dist,
                                        rng);
        }
        case Pipeline::Ga: {
            const auto [a, b] = select_two_random(pool, rng);
            auto children = sbx_crossover(pop[static_cast<std::size_t>(a)].weights,
                                          pop[static_cast<std::size_t>(b)].weights, cfg.op.CR,
                                          cfg.op.eta_c, rng);
            Vector y = std::move(children.first);
            if (p_mut > 0.0) y = polynomial_mutation(y, p_mut, cfg.op.eta_m, rng);
            return y;
        }
        case Pipeline::Nsga2:
            break;
    }
    throw std::logic_error("reproduce: nsga2 does not use the MOEA/D loop");
}

} // namespace

GenerationStats moead_generation(RunState& state, const MoeadConfig& cfg,
                                 const AssetUniverse& universe) {
    GenerationStats stats;
    const int n_pop = static_cast<int>(cfg.population);
    std::vector<int> whole(static_cast<std::size_t>(n_pop));
    std::iota(whole.begin(), whole.end(), 0);

    ++state.generation;
    for (int i = 0; i < n_pop; ++i) {
        const bool use_neighborhood = state.rng.uniform01() < cfg.select_neighborhood_prob;
        const std::vector<int>& pool = use_neighborhood ? state.ctx.neighborhood(i) : whole;

        const Vector parent = state.population[static_cast<std::size_t>(i)].weights;
        const Vector raw = reproduce(state, cfg, pool, i);
        PortfolioSolution offspring = make_solution(repair_or_uniform(raw), universe);

        stats.context_changed |= state.ctx.update_extremes(offspring.objectives);

        std::vector<int> order = pool;
        state.rng.shuffle(order);
        int n_c = 0;
        if (!state.ctx.degenerate()) {
            for (int p : order) {
                if (state.ctx.nbi_value(offspring.objectives, p) <=
                    state.ctx.nbi_value(state.population[static_cast<std::size_t>(p)].objectives,
                                        p)) {
                    state.population[static_cast<std::size_t>(p)] = offspring;
                    if (++n_c >= cfg.max_replacements) break;
                }
            }
        }
        stats.replacements += n_c;
        state.trial_log.push_back(
            {state.generation, (offspring.weights - parent).norm(), n_c});
    }
    return stats;
}

void nsga2_generation(RunState& state, const MoeadConfig& cfg, const AssetUniverse& universe) {
    auto& pop = state.population;
    auto& rng = state.rng;
    const std::size_t n_pop = pop.size();
    const Index n = universe.n;
    const double p_mut = effective_p_mut(cfg, n);

    ++state.generation;

    std::vector<ObjectivePoint> objs(n_pop);
    for (std::size_t i = 0; i < n_pop; ++i) objs[i] = pop[i].objectives;
    const auto fronts = fast_nondominated_sort(objs);
    std::vector<int> rank(n_pop, 0);
    std::vector<double> crowd(n_pop, 0.0);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        const auto cd = crowding_distance(objs, fronts[f]);
        for (std::size_t k = 0; k < fronts[f].size(); ++k) {
            rank[static_cast<std::size_t>(fronts[f][k])] = static_cast<int>(f);
            crowd[static_cast<std::size_t>(fronts[f][k])] = cd[k];
        }
    }

    auto tournament = [&]() -> int {
        int a = static_cast<int>(rng.below(n_pop));
        int b = static_cast<int>(rng.below(n_pop));
        while (n_pop > 1 && b == a) b = static_cast<int>(rng.below(n_pop));
        const auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
        if (rank[ia] != rank[ib]) return rank[ia] < rank[ib] ? a : b;
        if (crowd[ia] != crowd[ib]) return crowd[ia] > crowd[ib] ? a : b;
        return a;
    };

    std::vector<PortfolioSolution> combined = pop;
    combined.reserve(2 * n_pop);
    while (combined.size() < 2 * n_pop) {
        const int a = tournament();
        const int b = tournament();
        auto children = sbx_crossover(pop[static_cast<std::size_t>(a)].weights,
                                      pop[static_cast<std::size_t>(b)].weights, cfg.op.CR,
                                      cfg.op.eta_c, rng);
        for (Vector* child : {&children.first, &children.second}) {
            if (combined.size() >= 2 * n_pop) break;
            Vector y = std::move(*child);
            if (p_mut > 0.0) y = polynomial_mutation(y, p_mut, cfg.op.eta_m, rng);
            combined.push_back(make_solution(repair_or_uniform(y), universe));
        }
    }

    std::vector<ObjectivePoint> all_objs(combined.size());
    for (std::size_t i = 0; i < combined.size(); ++i) all_objs[i] = combined[i].objectives;
    const auto all_fronts = fast_nondominated_sort(all_objs);

    std::vector<PortfolioSolution> survivors;
    survivors.reserve(n_pop);
    for (const auto& front : all_fronts) {
        if (survivors.size() + front.size() <= n_pop) {
            for (int idx : front) survivors.push_back(combined[static_cast<std::size_t>(idx)]);
        } else {
            const auto cd = crowding_distance(all_objs, front);
            std::vector<std::size_t> order(front.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
                if (cd[x] != cd[y]) return cd[x] > cd[y];
                return front[x] < front[y];
            });
            for (std::size_t k = 0; survivors.size() < n_pop; ++k) {
                survivors.push_back(combined[static_cast<std::size_t>(front[order[k]])]);
            }
        }
        if (survivors.size() == n_pop) break;
    }
    pop = std::move(survivors);
}

RunRecord run(const AssetUniverse& universe, const ReferenceFrontier& frontier,
              const MoeadConfig& cfg, const RunOptions& options, std::uint64_t seed,
              const std::string& dataset_name) {
    const auto t0 = std::chrono::steady_clock::now();

    RunRecord record;
    record.algorithm = to_string(cfg.pipeline);
    record.dataset = dataset_name;
    record.seed = seed;
    record.config = cfg;

    RunState state = make_initial_state(universe, cfg, seed);

    auto population_objectives = [&] {
        std::vector<ObjectivePoint> objs;
        objs.reserve(state.population.size());
        for (const auto& s : state.population) objs.push_back(s.objectives);
        return objs;
    };
    auto current_igd = [&] {
        const FrontArchive archive = nondominated_filter(population_objectives());
        return igd(archive, frontier.points);
    };

    record.igd_trace.push_back(current_igd());

    auto want_snapshot = [&](Index g) {
        return std::find(options.snapshot_generations.begin(), options.snapshot_generations.end(),
                         g) != options.snapshot_generations.end();
    };

    for (Index g = 1; g <= cfg.max_generations; ++g) {
        if (cfg.pipeline == Pipeline::Nsga2) {
            nsga2_generation(state, cfg, universe);
        } else {
            moead_generation(state, cfg, universe);
        }
        record.igd_trace.push_back(current_igd());
        if (want_snapshot(g)) {
            record.population_snapshots.emplace_back(g, population_objectives());
        }

        if (cfg.early_stop_tol > 0.0 &&
            static_cast<Index>(record.igd_trace.size()) > cfg.early_stop_window) {
            const auto last = record.igd_trace.end();
            const auto first = last - cfg.early_stop_window;
            const auto [lo, hi] = std::minmax_element(first, last);
            if (*hi - *lo <= cfg.early_stop_tol) {
                record.early_stopped = true;
                break;
            }
        }
    }

    record.generations_run = state.generation;
    if (record.population_snapshots.empty() ||
        record.population_snapshots.back().first != state.generation) {
        record.population_snapshots.emplace_back(state.generation, population_objectives());
    }
    record.final_population = state.population;
    record.final_front = nondominated_filter(population_objectives(), "final");
    record.metrics = compute_metrics(record.final_front, frontier.points, options.hv_ref);
    if (options.record_trials) {
        record.trial_log = std::move(state.trial_log);
    }

    record.wall_time_sec =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return record;
}

} // namespace moport
