#pragma once

#include "rsdm/individual.hpp"
#include "rsdm/random_stream.hpp"
#include "rsdm/variant.hpp"

namespace rsdm {

/// Realized displacement child.x - parent.x.
struct StepRecord {
    ParameterVector delta;
};

StepRecord record_step(const Individual& parent, const Individual& child);

/// Self-similar sigma meta-mutation.
///
/// Draws u ~ U[0,1) once and returns
/// max(sigma_floor, -(sigma + coupling_fraction * k_norm) * ln(1 - u)),
/// an exponential deviate with mean sigma + coupling_fraction * k_norm.
double sample_sigma(double sigma, double k_norm, const VariantConfig& cfg, DeviateSource& rng);

/// Meta-mutates (sigma, k) for the directional variants.
///
/// Draw order: sigma' via sample_sigma(sigma, |k|), one lambda ~ N(1,1)
/// shared by every component, then one normal per component:
/// k'_i = N(0, sigma') + lambda * k_i.
MutationState meta_mutate_direction(const MutationState& mut, const VariantConfig& cfg,
                                    DeviateSource& rng);

/// x'_i = x_i + N(0, sigma) + lambda * k_i with a single fresh lambda.
/// Mutation controls are not touched.
ParameterVector directional_step(const ParameterVector& x, double sigma, const ParameterVector& k,
                                 const VariantConfig& cfg, DeviateSource& rng);

/// MEP: sigma' = sample_sigma(sigma, 0); x'_i = x_i + N(0, sigma'); k' = 0.
Individual spawn_plain(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng);

/// MEP+RS: as spawn_plain, but the child's sigma is the Euclidean length of
/// the realized step (floor-clamped).
Individual spawn_recorded(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng);

/// MEP+DM: meta_mutate_direction on the parent's controls, then a
/// directional_step of x using the child's (sigma, k).
Individual spawn_directional(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng);

/// MEP+RS+DM: meta_mutate_direction, then x' = x + k'. The stored k is the
/// realized floating-point step x' - x, so child.x - parent.x == child.k.
Individual spawn_directional_recorded(const Individual& parent, const VariantConfig& cfg,
                                      DeviateSource& rng);

/// Dispatches on (cfg.recorded_step, cfg.directional).
Individual spawn(const Individual& parent, const VariantConfig& cfg, DeviateSource& rng);

} // namespace rsdm
