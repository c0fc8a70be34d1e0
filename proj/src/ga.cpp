#include "baystow/ga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>

#include "baystow/error.hpp"

namespace baystow {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_individual(const Arrangement& arr, const Instance& instance, std::size_t* checked) {
    const auto report = validate(arr, instance);
    if (!report.empty())
        throw Error(ErrorCode::InvalidArrangement, "operator produced an invalid individual: " +
                                                       report.front().message);
    if (checked)
        ++*checked;
}

std::size_t resolve_swaps(const GaConfig& cfg, const Instance& instance) {
    return cfg.init_swaps < 0 ? instance.size() : static_cast<std::size_t>(cfg.init_swaps);
}

std::pair<Arrangement, Arrangement> crossover_unchecked(const Arrangement& p1, const Arrangement& p2,
                                                        const CrossoverPlanes& planes) {
    const auto& dims = p1.dims();
    const auto s1 = p1.slots();
    const auto s2 = p2.slots();

    ContainerId max_id = 0;
    for (auto id : s1)
        max_id = std::max(max_id, id);

    std::vector<char> in_region(s1.size(), 0);
    for (std::size_t i = 0; i < s1.size(); ++i) {
        const auto c = cell_at(dims, i);
        in_region[i] = c.x < planes.px && c.y < planes.py && c.z < planes.pz;
    }

    auto build = [&](std::span<const ContainerId> keep, std::span<const ContainerId> donor) {
        Arrangement child(dims);
        auto out = child.slots();
        std::vector<char> taken(max_id + 1, 0);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (in_region[i] && keep[i] != kEmpty) {
                out[i] = keep[i];
                taken[keep[i]] = 1;
            }
        }
        std::size_t d = 0;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            if (in_region[i] || keep[i] == kEmpty)
                continue;
            while (donor[d] == kEmpty || taken[donor[d]])
                ++d;
            out[i] = donor[d++];
        }
        return child;
    };

    return {build(s1, s2), build(s2, s1)};
}

} // namespace

void GaConfig::check() const {
    if (pop_size < 1)
        throw Error(ErrorCode::InvalidConfig, "population size must be at least 1");
    if (generations < 1)
        throw Error(ErrorCode::InvalidConfig, "generation count must be at least 1");
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
        throw Error(ErrorCode::InvalidConfig, "crossover probability must lie in [0,1]");
    if (!(mutation_prob >= 0.0 && mutation_prob <= 1.0))
        throw Error(ErrorCode::InvalidConfig, "mutation probability must lie in [0,1]");
    if (threads < 1)
        throw Error(ErrorCode::InvalidConfig, "thread count must be at least 1");
}

Population init_population(const Instance& instance, const GaConfig& cfg, std::mt19937_64& rng) {
    cfg.check();
    const auto base = canonical_fill(instance);
    const auto swaps = resolve_swaps(cfg, instance);
    const FitnessKernel kernel(instance);

    Population pop;
    pop.reserve(cfg.pop_size);
    std::vector<Arrangement> arrs;
    arrs.reserve(cfg.pop_size);
    for (std::size_t k = 0; k < cfg.pop_size; ++k)
        arrs.push_back(shuffle_ids(base, rng, swaps));
    std::vector<double> fit(arrs.size());
    evaluate_population(kernel, arrs, fit, cfg.threads > 1 ? ExecPolicy::Parallel : ExecPolicy::Serial,
                        cfg.threads);
    for (std::size_t k = 0; k < arrs.size(); ++k) {
        if (cfg.check_invariants)
            check_individual(arrs[k], instance, nullptr);
        pop.push_back({std::move(arrs[k]), fit[k]});
    }
    return pop;
}

RouletteWheel::RouletteWheel(std::span<const double> fitnesses) {
    if (fitnesses.empty())
        throw Error(ErrorCode::EmptyPopulation, "roulette wheel over an empty population");
    cumulative_.reserve(fitnesses.size());
    double total = 0.0;
    for (double f : fitnesses) {
        total += weight(f);
        cumulative_.push_back(total);
    }
}

std::size_t RouletteWheel::operator()(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> spin(0.0, cumulative_.back());
    const double r = spin(rng);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
    return std::min(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
}

std::size_t roulette_select(std::span<const double> fitnesses, std::mt19937_64& rng) {
    return RouletteWheel(fitnesses)(rng);
}

CrossoverPlanes draw_planes(const BayDims& dims, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> px(1, dims.n1), py(1, dims.n2), pz(1, dims.n3);
    CrossoverPlanes planes;
    planes.px = px(rng);
    planes.py = py(rng);
    planes.pz = pz(rng);
    return planes;
}

std::pair<Arrangement, Arrangement> crossover(const Arrangement& p1, const Arrangement& p2,
                                              const CrossoverPlanes& planes) {
    if (!(p1.dims() == p2.dims()))
        throw Error(ErrorCode::ShapeMismatch,
                    "parents have different bays " + to_string(p1.dims()) + " and " + to_string(p2.dims()));
    const auto s1 = p1.slots();
    const auto s2 = p2.slots();
    for (std::size_t i = 0; i < s1.size(); ++i)
        if ((s1[i] == kEmpty) != (s2[i] == kEmpty))
            throw Error(ErrorCode::ShapeMismatch,
                        "parents differ in occupancy at " + to_string(cell_at(p1.dims(), i)));
    const auto& d = p1.dims();
    if (planes.px < 0 || planes.px > d.n1 || planes.py < 0 || planes.py > d.n2 || planes.pz < 0 ||
        planes.pz > d.n3)
        throw Error(ErrorCode::ShapeMismatch, "crossover planes outside bay " + to_string(d));
    return crossover_unchecked(p1, p2, planes);
}

Arrangement swap_cells(Arrangement arr, const Cell& a, const Cell& b) {
    const auto ida = arr.at(a);
    const auto idb = arr.at(b);
    arr.set(a, idb);
    arr.set(b, ida);
    return arr;
}

Arrangement mutate(Arrangement arr, std::mt19937_64& rng) { return shuffle_ids(std::move(arr), rng, 1); }

Population evolve_step(const Population& pop, const FitnessKernel& kernel, const Instance& instance,
                       const GaConfig& cfg, std::mt19937_64& rng, std::size_t* checked) {
    if (pop.empty())
        throw Error(ErrorCode::EmptyPopulation, "cannot evolve an empty population");
    const auto n = pop.size();

    std::vector<double> fit(n);
    for (std::size_t k = 0; k < n; ++k)
        fit[k] = pop[k].fitness;
    const RouletteWheel wheel(fit);
    std::bernoulli_distribution do_cross(cfg.crossover_prob);
    std::bernoulli_distribution do_mutate(cfg.mutation_prob);

    // every random draw of the generation happens here, before evaluation
    std::vector<Arrangement> offspring;
    offspring.reserve(n + 1);
    while (offspring.size() < n) {
        const auto& a = pop[wheel(rng)].arrangement;
        const auto& b = pop[wheel(rng)].arrangement;
        if (do_cross(rng)) {
            auto [c1, c2] = crossover_unchecked(a, b, draw_planes(a.dims(), rng));
            offspring.push_back(std::move(c1));
            offspring.push_back(std::move(c2));
        } else {
            offspring.push_back(a);
            offspring.push_back(b);
        }
    }
    offspring.resize(n);
    for (auto& child : offspring)
        if (do_mutate(rng))
            child = mutate(std::move(child), rng);

    if (cfg.check_invariants)
        for (const auto& child : offspring)
            check_individual(child, instance, checked);

    std::vector<double> child_fit(n);
    evaluate_population(kernel, offspring, child_fit,
                        cfg.threads > 1 ? ExecPolicy::Parallel : ExecPolicy::Serial, cfg.threads);

    // P_inter: incumbents at 0..n-1, offspring at n..2n-1
    std::vector<std::size_t> order(2 * n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto fitness_of = [&](std::size_t k) { return k < n ? pop[k].fitness : child_fit[k - n]; };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return fitness_of(l) < fitness_of(r); });

    Population next;
    next.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto k = order[r];
        if (k < n)
            next.push_back(pop[k]);
        else
            next.push_back({std::move(offspring[k - n]), child_fit[k - n]});
    }
    return next;
}

Population evolve_step(const Population& pop, const Instance& instance, const GaConfig& cfg,
                       std::mt19937_64& rng) {
    const FitnessKernel kernel(instance);
    return evolve_step(pop, kernel, instance, cfg, rng);
}

RunStats run(const Instance& instance, const GaConfig& cfg) {
    cfg.check();
    const auto run_start = Clock::now();
    RunStats stats;
    std::mt19937_64 rng(cfg.seed);
    const FitnessKernel kernel(instance);

    auto gen_start = Clock::now();
    auto pop = init_population(instance, cfg, rng);
    if (cfg.check_invariants)
        stats.individuals_checked += pop.size();

    stats.generations.reserve(cfg.generations);
    for (std::size_t g = 1; g <= cfg.generations; ++g) {
        pop = evolve_step(pop, kernel, instance, cfg, rng,
                          cfg.check_invariants ? &stats.individuals_checked : nullptr);
        GenerationRecord rec;
        rec.generation = g;
        rec.best_fitness = pop.front().fitness;
        double sum = 0.0;
        for (const auto& ind : pop)
            sum += ind.fitness;
        rec.mean_fitness = sum / static_cast<double>(pop.size());
        rec.elapsed_ms = ms_since(gen_start);
        gen_start = Clock::now();
        stats.generations.push_back(rec);
    }

    stats.best = pop.front().arrangement;
    stats.initial_best = stats.generations.front().best_fitness;
    stats.final_best = stats.generations.back().best_fitness;
    stats.elapsed_ms = ms_since(run_start);
    return stats;
}

} // namespace baystow
