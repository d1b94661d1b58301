#pragma once

#include "rsdm/individual.hpp"
#include "rsdm/objectives.hpp"
#include "rsdm/random_stream.hpp"
#include "rsdm/variant.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rsdm {

struct RunConfig {
    Objective objective;
    VariantConfig variant;
    std::size_t survivors = 20;
    std::size_t progeny_per_survivor = 9;
    std::size_t max_generations = 50;
    /// Stop once best <= optimum_value + threshold. An infinite threshold
    /// disables early stopping.
    double convergence_threshold = 1e-8;
    std::uint64_t seed = 0;
    /// Founder sigma as a fraction of the mean init-box width.
    double sigma0_fraction = 0.1;

    /// survivors * (1 + progeny_per_survivor).
    std::size_t population_size() const noexcept { return survivors * (1 + progeny_per_survivor); }

    /// Throws ConfigurationError on an unusable configuration.
    void validate() const;
};

/// Per-generation record of a single run. Index 0 is the founder population.
struct ConvergenceCurve {
    std::vector<double> best_fitness;
    /// Median sigma over the survivors of each generation.
    std::vector<double> survivor_sigma_median;
    /// First generation whose best fitness met the threshold.
    std::optional<std::size_t> generations_to_threshold;
    std::size_t evaluations_used = 0;

    std::size_t generations_run() const noexcept
    {
        return best_fitness.empty() ? 0 : best_fitness.size() - 1;
    }
};

/// Evaluates individuals against one objective and counts the calls.
class Evaluator {
public:
    explicit Evaluator(const Objective& objective) : objective_(&objective) {}

    /// Fills ind.fitness if it is still empty. Throws EvaluationError on NaN.
    void evaluate(Individual& ind);

    std::size_t evaluations() const noexcept { return count_; }

private:
    const Objective* objective_;
    std::size_t count_ = 0;
};

/// Creates cfg.survivors evaluated founders: x uniform in the init box,
/// sigma = sigma0_fraction * mean box width (floor-clamped), k = 0.
std::vector<Individual> init_population(const RunConfig& cfg, DeviateSource& rng, Evaluator& evaluator);

/// One generation of pooled truncation selection.
///
/// Every parent spawns progeny_per_survivor children in parent order; the
/// children are evaluated once each, and the best cfg.survivors of
/// parents + children are returned sorted by fitness. Ties keep parents
/// ahead of children, then original order.
std::vector<Individual> step_generation(const std::vector<Individual>& parents, const RunConfig& cfg,
                                        DeviateSource& rng, Evaluator& evaluator);

/// A full run seeded from cfg.seed.
ConvergenceCurve run(const RunConfig& cfg);

} // namespace rsdm
