#include "rsdm/evolution.hpp"

#include "rsdm/errors.hpp"
#include "rsdm/median.hpp"
#include "rsdm/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rsdm {

namespace {

std::string describe(const ParameterVector& x)
{
    std::ostringstream os;
    os.precision(17);
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        os << (i ? ", " : "") << x[i];
    }
    os << ')';
    return os.str();
}

double best_of(const std::vector<Individual>& pop)
{
    double best = *pop.front().fitness;
    for (const auto& ind : pop) {
        best = std::min(best, *ind.fitness);
    }
    return best;
}

double sigma_median(const std::vector<Individual>& pop)
{
    std::vector<double> sigmas;
    sigmas.reserve(pop.size());
    for (const auto& ind : pop) {
        sigmas.push_back(ind.mut.sigma);
    }
    return median(sigmas);
}

} // namespace

void RunConfig::validate() const
{
    objective.validate();
    variant.validate();
    if (survivors == 0 || progeny_per_survivor == 0 || max_generations == 0) {
        throw ConfigurationError("survivors, progeny_per_survivor and max_generations must be positive");
    }
    if (std::isnan(convergence_threshold) || convergence_threshold < 0.0) {
        throw ConfigurationError("convergence_threshold must be nonnegative");
    }
    if (!std::isfinite(sigma0_fraction) || sigma0_fraction < 0.0) {
        throw ConfigurationError("sigma0_fraction must be finite and nonnegative");
    }
}

void Evaluator::evaluate(Individual& ind)
{
    if (ind.fitness) {
        return;
    }
    const double value = (*objective_)(ind.x);
    ++count_;
    if (std::isnan(value)) {
        throw EvaluationError("objective " + objective_->name + " returned NaN at x = " + describe(ind.x));
    }
    ind.fitness = value;
}

std::vector<Individual> init_population(const RunConfig& cfg, DeviateSource& rng, Evaluator& evaluator)
{
    const auto& box = cfg.objective.init_box;
    double mean_width = 0.0;
    for (const auto& iv : box) {
        mean_width += iv.width();
    }
    mean_width /= static_cast<double>(box.size());
    const double sigma0 = std::max(cfg.variant.sigma_floor, cfg.sigma0_fraction * mean_width);

    std::vector<Individual> founders;
    founders.reserve(cfg.survivors);
    for (std::size_t f = 0; f < cfg.survivors; ++f) {
        ParameterVector x = ParameterVector::zeros(cfg.objective.dim);
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = rng.uniform(box[i].lo, box[i].hi);
        }
        Individual ind = new_individual(x, sigma0, ParameterVector::zeros(x.size()));
        evaluator.evaluate(ind);
        founders.push_back(std::move(ind));
    }
    return founders;
}

std::vector<Individual> step_generation(const std::vector<Individual>& parents, const RunConfig& cfg,
                                        DeviateSource& rng, Evaluator& evaluator)
{
    if (parents.size() != cfg.survivors) {
        throw ConfigurationError("step_generation: expected " + std::to_string(cfg.survivors)
                                 + " parents, got " + std::to_string(parents.size()));
    }
    std::vector<Individual> pool;
    pool.reserve(cfg.population_size());
    for (const auto& parent : parents) {
        if (!parent.evaluated()) {
            throw ConfigurationError("step_generation: parent has not been evaluated");
        }
        pool.push_back(parent);
    }
    for (std::size_t p = 0; p < parents.size(); ++p) {
        for (std::size_t c = 0; c < cfg.progeny_per_survivor; ++c) {
            Individual child = spawn(parents[p], cfg.variant, rng);
            try {
                evaluator.evaluate(child);
            } catch (const EvaluationError& e) {
                throw EvaluationError(std::string(e.what()) + " (child " + std::to_string(c)
                                      + " of parent " + std::to_string(p) + ")");
            }
            pool.push_back(std::move(child));
        }
    }
    // parents precede children in the pool, so a stable sort breaks ties in their favour
    std::stable_sort(pool.begin(), pool.end(),
                     [](const Individual& a, const Individual& b) { return *a.fitness < *b.fitness; });
    pool.resize(cfg.survivors);
    return pool;
}

ConvergenceCurve run(const RunConfig& cfg)
{
    cfg.validate();
    RandomStream rng(cfg.seed);
    Evaluator evaluator(cfg.objective);
    const double target = cfg.objective.optimum_value + cfg.convergence_threshold;
    const bool stop_early = std::isfinite(cfg.convergence_threshold);

    ConvergenceCurve curve;
    curve.best_fitness.reserve(cfg.max_generations + 1);
    std::vector<Individual> population = init_population(cfg, rng, evaluator);

    for (std::size_t gen = 0;; ++gen) {
        const double best = best_of(population);
        curve.best_fitness.push_back(best);
        curve.survivor_sigma_median.push_back(sigma_median(population));
        if (stop_early && best <= target) {
            curve.generations_to_threshold = gen;
            break;
        }
        if (gen == cfg.max_generations) {
            break;
        }
        population = step_generation(population, cfg, rng, evaluator);
    }
    curve.evaluations_used = evaluator.evaluations();
    return curve;
}

} // namespace rsdm
