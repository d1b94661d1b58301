#pragma once

#include <array>
#include <string>
#include <string_view>

namespace rsdm {

/// Selects which meta-evolution features are active, plus strategy constants.
///
/// The four (recorded_step, directional) combinations are the MEP, MEP+RS,
/// MEP+DM and MEP+RS+DM variants.
struct VariantConfig {
    bool recorded_step = false;
    bool directional = false;
    /// Weight of |k| in the mean of the exponential sigma draw.
    double coupling_fraction = 0.1;
    /// lambda ~ N(lambda_mean, lambda_sd) scales the direction vector.
    double lambda_mean = 1.0;
    double lambda_sd = 1.0;
    /// Lower clamp applied to every freshly drawn or recorded sigma.
    double sigma_floor = 1e-300;

    /// Throws ConfigurationError if a constant is out of range.
    void validate() const;

    friend bool operator==(const VariantConfig&, const VariantConfig&) = default;
};

/// "MEP", "MEP+RS", "MEP+DM" or "MEP+RS+DM".
std::string variant_name(const VariantConfig& cfg);

/// Inverse of variant_name. Throws UsageError on an unknown label.
VariantConfig parse_variant(std::string_view label);

/// All four variants in table order: MEP, MEP+RS, MEP+DM, MEP+RS+DM.
std::array<VariantConfig, 4> all_variants();

} // namespace rsdm
