#pragma once

/// @file ga.hpp
/// @brief Generational GA with roulette-wheel parents, three-plane crossover,
/// swap mutation, copy, and (N + N) elitist truncation.

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "baystow/bay.hpp"
#include "baystow/evaluation.hpp"
#include "baystow/instance.hpp"

namespace baystow {

struct GaConfig {
    std::size_t pop_size = 50;
    std::size_t generations = 20;
    double crossover_prob = 0.8;
    double mutation_prob = 0.1;
    std::uint64_t seed = 1;
    /// Random transpositions applied to each initial individual; -1 means Nc.
    long long init_swaps = -1;
    /// Worker threads for fitness evaluation; 1 keeps the serial reference path.
    int threads = 1;
    /// Validate every individual as it is created; throws InvalidArrangement.
    bool check_invariants = false;

    /// Throws InvalidConfig.
    void check() const;
};

struct CrossoverPlanes {
    int px = 0;
    int py = 0;
    int pz = 0;
};

struct Individual {
    Arrangement arrangement;
    double fitness = 0.0;
};

using Population = std::vector<Individual>;

struct GenerationRecord {
    std::size_t generation = 0; ///< 1-based
    double best_fitness = 0.0;
    double mean_fitness = 0.0;
    double elapsed_ms = 0.0; ///< wall time of this generation alone
};

struct RunStats {
    std::vector<GenerationRecord> generations;
    Arrangement best;
    double initial_best = 0.0; ///< F_i: best of generation 1
    double final_best = 0.0;   ///< F_f: best of the last generation
    double elapsed_ms = 0.0;   ///< whole run, including initialisation
    std::size_t individuals_checked = 0; ///< non-zero only with check_invariants
};

Population init_population(const Instance& instance, const GaConfig& cfg, std::mt19937_64& rng);

/// Index k drawn with probability proportional to 1 / (1 + F_k).
std::size_t roulette_select(std::span<const double> fitnesses, std::mt19937_64& rng);

/// Prebuilt cumulative wheel for repeated draws over one generation.
class RouletteWheel {
  public:
    explicit RouletteWheel(std::span<const double> fitnesses);
    std::size_t operator()(std::mt19937_64& rng) const;
    static double weight(double fitness) noexcept { return 1.0 / (1.0 + fitness); }

  private:
    std::vector<double> cumulative_;
};

CrossoverPlanes draw_planes(const BayDims& dims, std::mt19937_64& rng);

/// Child 1 keeps p1 inside {x<px, y<py, z<pz} and takes the remaining ids
/// in the order they appear in p2; child 2 is the mirror. Throws ShapeMismatch.
std::pair<Arrangement, Arrangement> crossover(const Arrangement& p1, const Arrangement& p2,
                                              const CrossoverPlanes& planes);

/// Swap the ids of two distinct occupied cells drawn uniformly.
Arrangement mutate(Arrangement arr, std::mt19937_64& rng);
/// Deterministic exchange of two cells' contents.
Arrangement swap_cells(Arrangement arr, const Cell& a, const Cell& b);

/// One generation: N offspring, merge to 2N, stable sort ascending, keep N.
Population evolve_step(const Population& pop, const Instance& instance, const GaConfig& cfg,
                       std::mt19937_64& rng);

/// Same, with a caller-owned kernel (avoids rebuilding it every generation).
/// `checked`, when non-null, is incremented once per validated offspring.
Population evolve_step(const Population& pop, const FitnessKernel& kernel, const Instance& instance,
                       const GaConfig& cfg, std::mt19937_64& rng, std::size_t* checked = nullptr);

RunStats run(const Instance& instance, const GaConfig& cfg);

} // namespace baystow
