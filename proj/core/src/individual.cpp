#include "rsdm/individual.hpp"

#include "rsdm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rsdm {

bool ParameterVector::all_finite() const noexcept
{
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ParameterVector::norm() const noexcept
{
    double sum = 0.0;
    for (const double v : values_) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

ParameterVector difference(const ParameterVector& a, const ParameterVector& b)
{
    if (a.size() != b.size()) {
        throw ConfigurationError("difference: size mismatch " + std::to_string(a.size()) + " vs "
                                 + std::to_string(b.size()));
    }
    ParameterVector out = ParameterVector::zeros(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Individual new_individual(const ParameterVector& x, double sigma0, const ParameterVector& k0)
{
    if (x.size() == 0) {
        throw ConfigurationError("new_individual: parameter vector must have at least one entry");
    }
    if (x.size() != k0.size()) {
        throw ConfigurationError("new_individual: x has " + std::to_string(x.size())
                                 + " entries but k has " + std::to_string(k0.size()));
    }
    if (!x.all_finite() || !k0.all_finite()) {
        throw ValidationError("new_individual: non-finite entry in x or k");
    }
    if (!std::isfinite(sigma0) || sigma0 < 0.0) {
        throw ValidationError("new_individual: sigma must be finite and nonnegative");
    }
    return Individual{x, MutationState{sigma0, k0}, std::nullopt};
}

} // namespace rsdm
