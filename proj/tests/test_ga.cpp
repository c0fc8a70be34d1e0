#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "baystow/error.hpp"
#include "baystow/ga.hpp"
#include "baystow/io.hpp"
#include "support.hpp"

using namespace baystow;
using testsupport::from_scan;
using testsupport::make_instance;

namespace {

std::vector<ContainerId> ids_of(const Arrangement& a) { return {a.slots().begin(), a.slots().end()}; }

bool is_permutation_of_base(const Arrangement& a, std::size_t count) {
    auto ids = ids_of(a);
    for (std::size_t i = 0; i < ids.size(); ++i)
        if ((i < count) != (ids[i] != kEmpty))
            return false;
    ids.resize(count);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < count; ++i)
        if (ids[i] != i + 1)
            return false;
    return true;
}

// |observed - expected| within 3 binomial standard deviations
void check_frequency(std::size_t hits, std::size_t draws, double p) {
    const double sigma = std::sqrt(draws * p * (1.0 - p));
    CHECK(std::abs(static_cast<double>(hits) - draws * p) <= 3.0 * sigma);
}

bool same_stats(const RunStats& a, const RunStats& b) {
    if (a.generations.size() != b.generations.size())
        return false;
    for (std::size_t g = 0; g < a.generations.size(); ++g) {
        const auto &x = a.generations[g], &y = b.generations[g];
        if (x.generation != y.generation || x.best_fitness != y.best_fitness || x.mean_fitness != y.mean_fitness)
            return false;
    }
    return a.best == b.best && a.initial_best == b.initial_best && a.final_best == b.final_best;
}

} // namespace

TEST_CASE("initial population") {
    const auto inst = generate_instance({{4, 4, 4}, 64, 1.0, 100.0, 42});
    SUBCASE("single unshuffled individual") {
        GaConfig cfg;
        cfg.pop_size = 1;
        cfg.init_swaps = 0;
        std::mt19937_64 rng(1);
        const auto pop = init_population(inst, cfg, rng);
        REQUIRE(pop.size() == 1);
        CHECK(pop[0].arrangement == canonical_fill(inst));
    }
    SUBCASE("valid and reproducible") {
        GaConfig cfg;
        cfg.pop_size = 50;
        std::mt19937_64 r1(99), r2(99);
        const auto a = init_population(inst, cfg, r1);
        const auto b = init_population(inst, cfg, r2);
        REQUIRE(a.size() == 50);
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(validate(a[k].arrangement, inst).empty());
            CHECK(a[k].arrangement == b[k].arrangement);
            CHECK(a[k].fitness == b[k].fitness);
        }
    }
}

TEST_CASE("config validation") {
    GaConfig cfg;
    cfg.pop_size = 0;
    CHECK_THROWS_AS(cfg.check(), Error);
    cfg = {};
    cfg.crossover_prob = 1.5;
    CHECK_THROWS_AS(cfg.check(), Error);
    cfg = {};
    cfg.generations = 0;
    CHECK_THROWS_AS(cfg.check(), Error);
}

TEST_CASE("roulette selection") {
    std::mt19937_64 rng(2024);
    constexpr std::size_t draws = 100'000;

    SUBCASE("single individual") {
        const std::vector<double> f{12.5};
        for (int k = 0; k < 100; ++k)
            CHECK(roulette_select(f, rng) == 0);
    }
    SUBCASE("equal fitness is uniform") {
        const std::vector<double> f(5, 7.0);
        const RouletteWheel wheel(f);
        std::vector<std::size_t> hits(f.size(), 0);
        for (std::size_t k = 0; k < draws; ++k)
            ++hits[wheel(rng)];
        for (auto h : hits)
            check_frequency(h, draws, 0.2);
    }
    SUBCASE("weights 1/(1+F)") {
        // F = (0, 3) -> w = (1, 0.25) -> p = (0.8, 0.2)
        const std::vector<double> f{0.0, 3.0};
        const RouletteWheel wheel(f);
        std::size_t first = 0;
        for (std::size_t k = 0; k < draws; ++k)
            first += wheel(rng) == 0;
        check_frequency(first, draws, 0.8);
    }
    SUBCASE("empty population") {
        try {
            (void)roulette_select(std::vector<double>{}, rng);
            FAIL("expected EmptyPopulation");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::EmptyPopulation);
        }
    }
}

TEST_CASE("roulette frequencies match weights on random fitness vectors") {
    std::mt19937_64 rng(31);
    constexpr std::size_t draws = 100'000;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> f(6);
        for (auto& v : f)
            v = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
        double total = 0.0;
        for (double v : f)
            total += 1.0 / (1.0 + v);
        const RouletteWheel wheel(f);
        std::vector<std::size_t> hits(f.size(), 0);
        for (std::size_t k = 0; k < draws; ++k)
            ++hits[wheel(rng)];
        for (std::size_t k = 0; k < f.size(); ++k)
            check_frequency(hits[k], draws, (1.0 / (1.0 + f[k])) / total);
    }
}

TEST_CASE("crossover") {
    SUBCASE("hand-traced fill rule") {
        const BayDims d{2, 1, 2};
        const auto p1 = from_scan(d, {1, 2, 3, 4});
        const auto p2 = from_scan(d, {4, 3, 2, 1});
        const auto [c1, c2] = crossover(p1, p2, {1, 1, 1});
        CHECK(ids_of(c1) == std::vector<ContainerId>{1, 4, 3, 2});
        CHECK(ids_of(c2) == std::vector<ContainerId>{4, 1, 2, 3});
    }
    SUBCASE("identical parents") {
        std::mt19937_64 rng(4);
        const auto p = shuffle_ids(canonical_fill(BayDims{3, 3, 3}, 20), rng, 20);
        const auto [c1, c2] = crossover(p, p, {2, 1, 2});
        CHECK(c1 == p);
        CHECK(c2 == p);
    }
    SUBCASE("full region returns the parents") {
        std::mt19937_64 rng(5);
        const BayDims d{3, 2, 4};
        const auto p1 = shuffle_ids(canonical_fill(d, 19), rng, 19);
        const auto p2 = shuffle_ids(canonical_fill(d, 19), rng, 19);
        const auto [c1, c2] = crossover(p1, p2, {3, 2, 4});
        CHECK(c1 == p1);
        CHECK(c2 == p2);
    }
    SUBCASE("shape mismatch") {
        const auto a = canonical_fill(BayDims{2, 2, 2}, 5);
        CHECK_THROWS_AS(crossover(a, canonical_fill(BayDims{2, 2, 2}, 6), {1, 1, 1}), Error);
        CHECK_THROWS_AS(crossover(a, canonical_fill(BayDims{4, 1, 2}, 5), {1, 1, 1}), Error);
    }
}

TEST_CASE("crossover children are permutations") {
    std::mt19937_64 rng(8080);
    std::uniform_int_distribution<int> ext(1, 5);
    for (int trial = 0; trial < 10'000; ++trial) {
        const BayDims d{ext(rng), ext(rng), ext(rng)};
        const auto nc = std::uniform_int_distribution<std::size_t>(1, d.capacity())(rng);
        const auto p1 = shuffle_ids(canonical_fill(d, nc), rng, nc);
        const auto p2 = shuffle_ids(canonical_fill(d, nc), rng, nc);
        const auto planes = draw_planes(d, rng);
        REQUIRE(planes.px >= 1);
        REQUIRE(planes.px <= d.n1);
        const auto [c1, c2] = crossover(p1, p2, planes);
        REQUIRE(is_permutation_of_base(c1, nc));
        REQUIRE(is_permutation_of_base(c2, nc));
        // region genes come from the matching parent
        for (std::size_t i = 0; i < nc; ++i) {
            const auto c = cell_at(d, i);
            if (c.x < planes.px && c.y < planes.py && c.z < planes.pz) {
                REQUIRE(c1.slots()[i] == p1.slots()[i]);
                REQUIRE(c2.slots()[i] == p2.slots()[i]);
            }
        }
    }
}

TEST_CASE("mutation") {
    std::mt19937_64 rng(12);
    const auto one = canonical_fill(BayDims{2, 2, 2}, 1);
    CHECK(mutate(one, rng) == one);

    const auto base = canonical_fill(BayDims{2, 2, 2}, 6);
    CHECK(swap_cells(base, {1, 0, 0}, {1, 0, 0}) == base);

    const auto pair = canonical_fill(BayDims{1, 1, 2}, 2);
    for (int k = 0; k < 50; ++k)
        CHECK(ids_of(mutate(pair, rng)) == std::vector<ContainerId>{2, 1});

    // exactly two cells change for Nc >= 2
    for (int k = 0; k < 100; ++k) {
        const auto m = mutate(base, rng);
        int diff = 0;
        for (std::size_t i = 0; i < base.slots().size(); ++i)
            diff += base.slots()[i] != m.slots()[i];
        CHECK(diff == 2);
    }
}

TEST_CASE("evolve_step") {
    const auto inst = generate_instance({{3, 3, 3}, 25, 1.0, 100.0, 17});
    SUBCASE("copy-only identical population is a fixed point") {
        GaConfig cfg;
        cfg.pop_size = 10;
        cfg.crossover_prob = 0.0;
        cfg.mutation_prob = 0.0;
        std::mt19937_64 rng(1);
        const auto arr = shuffle_ids(canonical_fill(inst), rng, 25);
        const FitnessKernel kernel(inst);
        Population pop(10, Individual{arr, kernel(arr)});
        const auto next = evolve_step(pop, inst, cfg, rng);
        REQUIRE(next.size() == pop.size());
        for (const auto& ind : next)
            CHECK(ind.arrangement == arr);
    }
    SUBCASE("size and elitism over many steps") {
        std::mt19937_64 rng(555);
        for (std::size_t n : {1u, 2u, 7u, 20u}) {
            GaConfig cfg;
            cfg.pop_size = n;
            cfg.check_invariants = true;
            auto pop = init_population(inst, cfg, rng);
            for (int step = 0; step < 250; ++step) {
                const double best_before = pop.front().fitness;
                auto next = evolve_step(pop, inst, cfg, rng);
                REQUIRE(next.size() == n);
                REQUIRE(next.front().fitness <= best_before);
                REQUIRE(std::is_sorted(next.begin(), next.end(), [](const Individual& a, const Individual& b) {
                    return a.fitness < b.fitness;
                }));
                pop = std::move(next);
            }
        }
    }
}

TEST_CASE("run") {
    const auto inst = generate_instance({{4, 4, 4}, 64, 1.0, 100.0, 64});
    GaConfig cfg;
    cfg.pop_size = 50;
    cfg.seed = 2718;

    SUBCASE("one generation") {
        cfg.generations = 1;
        const auto s = run(inst, cfg);
        REQUIRE(s.generations.size() == 1);
        CHECK(s.initial_best == s.final_best);
        CHECK(fitness(s.best, inst).fitness == s.final_best);
    }
    SUBCASE("twenty generations improve and are monotone") {
        cfg.generations = 20;
        const auto s = run(inst, cfg);
        REQUIRE(s.generations.size() == 20);
        CHECK(s.final_best < s.initial_best);
        for (std::size_t g = 1; g < s.generations.size(); ++g)
            CHECK(s.generations[g].best_fitness <= s.generations[g - 1].best_fitness);
        for (const auto& g : s.generations) {
            CHECK(g.elapsed_ms >= 0.0);
            CHECK(g.mean_fitness >= g.best_fitness);
        }
    }
    SUBCASE("longer run from the same seed is no worse") {
        cfg.generations = 20;
        const auto short_run = run(inst, cfg);
        cfg.generations = 100;
        const auto long_run = run(inst, cfg);
        CHECK(long_run.final_best <= short_run.final_best);
        CHECK(long_run.generations[19].best_fitness == short_run.final_best);
    }
    SUBCASE("deterministic, and parallel evaluation changes nothing") {
        cfg.generations = 30;
        const auto a = run(inst, cfg);
        const auto b = run(inst, cfg);
        cfg.threads = 4;
        const auto c = run(inst, cfg);
        CHECK(same_stats(a, b));
        CHECK(same_stats(a, c));
    }
    SUBCASE("invariant checking sees every individual") {
        cfg.generations = 15;
        cfg.pop_size = 13;
        cfg.check_invariants = true;
        const auto s = run(inst, cfg);
        CHECK(s.individuals_checked == 13u + 13u * 15u);
    }
}
