#include "rsdm/mutation.hpp"

#include <algorithm>
#include <cmath>

namespace rsdm {

namespace {

Individual unevaluated(ParameterVector x, MutationState mut)
{
    return Individual{std::move(x), std::move(mut), std::nullopt};
}

} // namespace

StepRecord record_step(const Individual& parent, const Individual& child)
{
    return StepRecord{difference(child.x, parent.x)};
}

double sample_sigma(double sigma, double k_norm, const VariantConfig& cfg, DeviateSource& rng)
{
    const double mean = sigma + cfg.coupling_fraction * k_norm;
    const double u = rng.uniform01();
    // u in [0,1) keeps log1p(-u) finite; u == 0 gives exactly 0
    const double drawn = -mean * std::log1p(-u);
    return std::max(cfg.sigma_floor, drawn);
}

MutationState meta_mutate_direction(const MutationState& mut, const VariantConfig& cfg,
                                    DeviateSource& rng)
{
    MutationState out;
    out.sigma = sample_sigma(mut.sigma, mut.k.norm(), cfg, rng);
    const double lambda = rng.gaussian(cfg.lambda_mean, cfg.lambda_sd);
    out.k = ParameterVector::zeros(mut.k.size());
    for (std::size_t i = 0; i < mut.k.size(); ++i) {
        out.k[i] = rng.gaussian(0.0, out.sigma) + lambda * mut.k[i];
    }
    return out;
}

ParameterVector directional_step(const ParameterVector& x, double sigma, const ParameterVector& k,
                                 const VariantConfig& cfg, DeviateSource& rng)
{
    const double lambda = rng.gaussian(cfg.lambda_mean, cfg.lambda_sd);
    ParameterVector out = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = x[i] + rng.gaussian(0.0, sigma) + lambda * k[i];
    }
    return out;
}

Individual spawn_plain(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng)
{
    const double sigma = sample_sigma(parent.mut.sigma, 0.0, cfg, rng);
    ParameterVector x = parent.x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += rng.gaussian(0.0, sigma);
    }
    return unevaluated(std::move(x), MutationState{sigma, ParameterVector::zeros(parent.dimension())});
}

Individual spawn_recorded(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng)
{
    Individual child = spawn_plain(parent, cfg, rng);
    child.mut.sigma = std::max(cfg.sigma_floor, record_step(parent, child).delta.norm());
    return child;
}

Individual spawn_directional(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng)
{
    MutationState mut = meta_mutate_direction(parent.mut, cfg, rng);
    ParameterVector x = directional_step(parent.x, mut.sigma, mut.k, cfg, rng);
    return unevaluated(std::move(x), std::move(mut));
}

Individual spawn_directional_recorded(const Individual& parent, const VariantConfig& cfg,
                                      DeviateSource& rng)
{
    MutationState mut = meta_mutate_direction(parent.mut, cfg, rng);
    ParameterVector x = parent.x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += mut.k[i];
        // keep the step actually taken, after rounding
        mut.k[i] = x[i] - parent.x[i];
    }
    return unevaluated(std::move(x), std::move(mut));
}

Individual spawn(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng)
{
    if (cfg.directional) {
        return cfg.recorded_step ? spawn_directional_recorded(parent, cfg, rng)
                                 : spawn_directional(parent, cfg, rng);
    }
    return cfg.recorded_step ? spawn_recorded(parent, cfg, rng) : spawn_plain(parent, cfg, rng);
}

} // namespace rsdm
