#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace rsdm {

/// Real-valued vector in problem units. Its length is fixed at construction.
class ParameterVector {
public:
    ParameterVector() = default;
    explicit ParameterVector(std::vector<double> values) : values_(std::move(values)) {}
    ParameterVector(std::initializer_list<double> values) : values_(values) {}

    /// n zeros.
    static ParameterVector zeros(std::size_t n) { return ParameterVector(std::vector<double>(n, 0.0)); }

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }

    bool all_finite() const noexcept;

    /// Euclidean length.
    double norm() const noexcept;

    friend bool operator==(const ParameterVector&, const ParameterVector&) = default;

private:
    std::vector<double> values_;
};

/// a - b, componentwise. Sizes must match.
ParameterVector difference(const ParameterVector& a, const ParameterVector& b);

/// Heritable mutation controls: omni-directional rate and direction record.
struct MutationState {
    double sigma = 0.0;
    ParameterVector k;

    friend bool operator==(const MutationState&, const MutationState&) = default;
};

/// One population member. `fitness` caches objective(x) once evaluated.
struct Individual {
    ParameterVector x;
    MutationState mut;
    std::optional<double> fitness;

    std::size_t dimension() const noexcept { return x.size(); }
    bool evaluated() const noexcept { return fitness.has_value(); }

    friend bool operator==(const Individual&, const Individual&) = default;
};

/// Builds an unevaluated individual from copies of its inputs.
///
/// Throws ConfigurationError when x and k0 differ in length or are empty,
/// ValidationError on non-finite entries or a negative sigma0.
Individual new_individual(const ParameterVector& x, double sigma0, const ParameterVector& k0);

} // namespace rsdm
