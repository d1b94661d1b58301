#include "rsdm/variant.hpp"

#include "rsdm/errors.hpp"

#include <cmath>

namespace rsdm {

void VariantConfig::validate() const
{
    if (!(coupling_fraction > 0.0) || !std::isfinite(coupling_fraction)) {
        throw ConfigurationError("coupling_fraction must be positive and finite");
    }
    if (!(lambda_sd > 0.0) || !std::isfinite(lambda_sd) || !std::isfinite(lambda_mean)) {
        throw ConfigurationError("lambda_sd must be positive; lambda_mean and lambda_sd finite");
    }
    if (!(sigma_floor > 0.0) || !std::isfinite(sigma_floor)) {
        throw ConfigurationError("sigma_floor must be positive and finite");
    }
}

std::string variant_name(const VariantConfig& cfg)
{
    std::string name = "MEP";
    if (cfg.recorded_step) {
        name += "+RS";
    }
    if (cfg.directional) {
        name += "+DM";
    }
    return name;
}

VariantConfig parse_variant(std::string_view label)
{
    for (const auto& cfg : all_variants()) {
        if (variant_name(cfg) == label) {
            return cfg;
        }
    }
    throw UsageError("unknown variant '" + std::string(label)
                     + "' (valid: MEP, MEP+RS, MEP+DM, MEP+RS+DM)");
}

std::array<VariantConfig, 4> all_variants()
{
    std::array<VariantConfig, 4> out{};
    out[1].recorded_step = true;
    out[2].directional = true;
    out[3].recorded_step = true;
    out[3].directional = true;
    return out;
}

} // namespace rsdm
