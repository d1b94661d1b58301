#include "support/sampling.hpp"

#include "rsdm/errors.hpp"
#include "rsdm/evolution.hpp"
#include "rsdm/mutation.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

using namespace rsdm;

namespace {

RunConfig config_for(Objective obj, bool rs = false, bool dm = false)
{
    RunConfig cfg;
    cfg.objective = std::move(obj);
    cfg.variant.recorded_step = rs;
    cfg.variant.directional = dm;
    return cfg;
}

/// One-dimensional objective equal to the coordinate itself.
Objective identity_objective()
{
    return Objective{"ID", 1, [](const ParameterVector& x) { return x[0]; }, {Interval{-1.0, 1.0}}, -1.0,
                     ParameterVector{-1.0}};
}

Individual evaluated_at(double x, double sigma)
{
    auto ind = new_individual({x}, sigma, {0.0});
    ind.fitness = x;
    return ind;
}

/// Sphere in any dimension.
Objective sphere(std::size_t n)
{
    return Objective{"SPHERE", n,
                     [](const ParameterVector& x) {
                         double s = 0.0;
                         for (double v : x.values()) {
                             s += v * v;
                         }
                         return s;
                     },
                     std::vector<Interval>(n, Interval{-5.12, 5.12}), 0.0, ParameterVector::zeros(n)};
}

/// For a directional spawn of dimension n, zeroes the normals that perturb
/// k so an initially zero direction stays zero. Every other draw comes from
/// the wrapped stream.
class FrozenDirectionSource final : public DeviateSource {
public:
    FrozenDirectionSource(std::uint64_t seed, std::size_t n) : inner_(seed), n_(n) {}
    double uniform01() override { return inner_.uniform01(); }
    double standard_normal() override
    {
        // per spawn: lambda_k, n k-noise, lambda_x, n x-noise
        const std::size_t pos = count_++ % (2 * n_ + 2);
        if (pos >= 1 && pos <= n_) {
            return 0.0;
        }
        return inner_.standard_normal();
    }

private:
    RandomStream inner_;
    std::size_t n_;
    std::size_t count_ = 0;
};

} // namespace

TEST_CASE("init_population")
{
    SUBCASE("defaults on F1")
    {
        const auto cfg = config_for(objective_f1());
        RandomStream rng(1);
        Evaluator eval(cfg.objective);
        const auto founders = init_population(cfg, rng, eval);
        REQUIRE(founders.size() == 20);
        CHECK(eval.evaluations() == 20);
        for (const auto& f : founders) {
            CHECK(f.mut.sigma == doctest::Approx(1.024).epsilon(1e-15));
            CHECK(f.mut.k == ParameterVector{0, 0, 0});
            REQUIRE(f.evaluated());
            CHECK(*f.fitness == f1(f.x[0], f.x[1], f.x[2]));
            for (double v : f.x.values()) {
                CHECK(v >= -5.12);
                CHECK(v < 5.12);
            }
        }
    }
    SUBCASE("zero sigma fraction clamps to the floor")
    {
        auto cfg = config_for(objective_f1());
        cfg.sigma0_fraction = 0.0;
        RandomStream rng(1);
        Evaluator eval(cfg.objective);
        CHECK(init_population(cfg, rng, eval).front().mut.sigma == cfg.variant.sigma_floor);
    }
    SUBCASE("equal seeds give identical founders")
    {
        const auto cfg = config_for(objective_f9());
        RandomStream a(17);
        RandomStream b(17);
        Evaluator ea(cfg.objective);
        Evaluator eb(cfg.objective);
        CHECK(init_population(cfg, a, ea) == init_population(cfg, b, eb));
    }
}

TEST_CASE("step_generation")
{
    auto cfg = config_for(identity_objective());
    cfg.survivors = 2;
    cfg.progeny_per_survivor = 1;
    const double unit = 1.0 - std::exp(-1.0);

    SUBCASE("pooled truncation over parents and children")
    {
        const std::vector<Individual> parents{evaluated_at(1.0, 1.0), evaluated_at(5.0, 1.0)};
        // sigma' = 1 for both children; children land at 0.5 and 9.0
        testing::ScriptedSource src({unit, unit}, {-0.5, 4.0});
        Evaluator eval(cfg.objective);
        const auto next = step_generation(parents, cfg, src, eval);
        REQUIRE(next.size() == 2);
        CHECK(*next[0].fitness == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(*next[1].fitness == 1.0);
        CHECK(next[1] == parents[0]);
        CHECK(eval.evaluations() == 2);
    }
    SUBCASE("elitism keeps parents when every child is worse")
    {
        const std::vector<Individual> parents{evaluated_at(1.0, 1.0), evaluated_at(2.0, 1.0)};
        testing::ScriptedSource src({unit, unit}, {3.0, 4.0});
        Evaluator eval(cfg.objective);
        CHECK(step_generation(parents, cfg, src, eval) == parents);
    }
    SUBCASE("ties favour parents")
    {
        const std::vector<Individual> parents{evaluated_at(1.0, 1.0), evaluated_at(2.0, 1.0)};
        // child of parent 0 lands exactly on 2.0 and ties parent 1
        testing::ScriptedSource src({0.0, unit}, {0.0, 5.0});
        auto tie_cfg = cfg;
        tie_cfg.objective.eval = [](const ParameterVector& x) { return x[0] < 1.5 ? 2.0 : x[0]; };
        Evaluator eval(tie_cfg.objective);
        auto tied_parents = parents;
        tied_parents[0].fitness = 2.0;
        const auto next = step_generation(tied_parents, tie_cfg, src, eval);
        CHECK(next[0] == tied_parents[0]);
        CHECK(next[1] == tied_parents[1]);
    }
    SUBCASE("evaluation budget per generation")
    {
        auto big = config_for(objective_f1());
        RandomStream rng(3);
        Evaluator eval(big.objective);
        auto pop = init_population(big, rng, eval);
        for (int g = 0; g < 5; ++g) {
            const auto before = eval.evaluations();
            pop = step_generation(pop, big, rng, eval);
            CHECK(pop.size() == big.survivors);
            CHECK(eval.evaluations() - before == big.survivors * big.progeny_per_survivor);
        }
    }
    SUBCASE("wrong parent count is rejected")
    {
        testing::ScriptedSource src({}, {});
        Evaluator eval(cfg.objective);
        CHECK_THROWS_AS(step_generation({evaluated_at(1.0, 1.0)}, cfg, src, eval), ConfigurationError);
    }
}

TEST_CASE("a NaN objective aborts the run with an evaluation error")
{
    auto cfg = config_for(objective_f9());
    cfg.objective.name = "NANNY";
    cfg.objective.eval = [](const ParameterVector& x) {
        return x[0] > 0.0 ? std::numeric_limits<double>::quiet_NaN() : x[0] * x[0];
    };
    try {
        run(cfg);
        FAIL("expected EvaluationError");
    } catch (const EvaluationError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("NANNY") != std::string::npos);
        CHECK(msg.find("NaN") != std::string::npos);
    }
}

TEST_CASE("run")
{
    SUBCASE("infinite threshold runs every generation")
    {
        auto cfg = config_for(objective_f1());
        cfg.convergence_threshold = std::numeric_limits<double>::infinity();
        cfg.max_generations = 12;
        const auto curve = run(cfg);
        CHECK(curve.generations_run() == 12);
        CHECK(curve.best_fitness.size() == 13);
        CHECK_FALSE(curve.generations_to_threshold.has_value());
    }
    SUBCASE("F1 under MEP reaches the threshold")
    {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto cfg = config_for(objective_f1());
            cfg.seed = seed;
            const auto curve = run(cfg);
            REQUIRE(curve.generations_to_threshold.has_value());
            CHECK(*curve.generations_to_threshold <= 50);
            CHECK(curve.best_fitness.back() <= 1e-8);
            CHECK(*curve.generations_to_threshold == curve.generations_run());
        }
    }
    SUBCASE("curves are non-increasing and the budget is exact")
    {
        for (const auto& obj : registry()) {
            for (const auto& v : all_variants()) {
                for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                    auto cfg = config_for(obj, v.recorded_step, v.directional);
                    cfg.seed = seed;
                    const auto curve = run(cfg);
                    for (std::size_t g = 1; g < curve.best_fitness.size(); ++g) {
                        REQUIRE(curve.best_fitness[g] <= curve.best_fitness[g - 1]);
                    }
                    REQUIRE(curve.evaluations_used
                            == cfg.survivors + curve.generations_run() * cfg.survivors * cfg.progeny_per_survivor);
                    REQUIRE(curve.survivor_sigma_median.size() == curve.best_fitness.size());
                }
            }
        }
    }
    SUBCASE("first index at or below the threshold")
    {
        auto cfg = config_for(objective_f6(), true, true);
        cfg.seed = 4;
        cfg.convergence_threshold = 1e-3;
        const auto curve = run(cfg);
        REQUIRE(curve.generations_to_threshold.has_value());
        const auto g = *curve.generations_to_threshold;
        CHECK(curve.best_fitness[g] <= 1e-3);
        for (std::size_t i = 0; i < g; ++i) {
            CHECK(curve.best_fitness[i] > 1e-3);
        }
    }
    SUBCASE("higher-dimensional objectives are supported")
    {
        auto cfg = config_for(sphere(30), true, true);
        cfg.convergence_threshold = std::numeric_limits<double>::infinity();
        const auto curve = run(cfg);
        CHECK(curve.best_fitness.size() == 51);
        CHECK(curve.best_fitness.back() < curve.best_fitness.front() * 0.1);
    }
    SUBCASE("invalid configurations are rejected")
    {
        auto cfg = config_for(objective_f1());
        cfg.survivors = 0;
        CHECK_THROWS_AS(run(cfg), ConfigurationError);
        cfg = config_for(objective_f1());
        cfg.convergence_threshold = -1.0;
        CHECK_THROWS_AS(run(cfg), ConfigurationError);
    }
}

TEST_CASE("MEP+DM with a frozen zero direction matches MEP after one generation")
{
    // generation-1 best fitness distribution over 200 seeds
    const std::size_t seeds = 200;
    std::vector<double> plain;
    std::vector<double> frozen;
    for (std::uint64_t seed = 1; seed <= seeds; ++seed) {
        {
            const auto cfg = config_for(objective_f9());
            RandomStream rng(seed);
            Evaluator eval(cfg.objective);
            const auto next = step_generation(init_population(cfg, rng, eval), cfg, rng, eval);
            plain.push_back(*next.front().fitness);
        }
        {
            const auto cfg = config_for(objective_f9(), false, true);
            RandomStream init_rng(seed);
            Evaluator eval(cfg.objective);
            auto founders = init_population(cfg, init_rng, eval);
            FrozenDirectionSource src(seed + 100'000, cfg.objective.dim);
            const auto next = step_generation(founders, cfg, src, eval);
            for (const auto& ind : next) {
                REQUIRE(ind.mut.k.norm() == 0.0);
            }
            frozen.push_back(*next.front().fitness);
        }
    }
    CHECK(testing::ks_statistic(plain, frozen) < testing::ks_critical(1e-3, seeds, seeds));
}
