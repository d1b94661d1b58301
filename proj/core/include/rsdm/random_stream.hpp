#pragma once

#include <cstdint>
#include <optional>
#include <random>

namespace rsdm {

/// Source of the two primitive deviates every stochastic operation consumes.
///
/// Mutation and selection code only ever draws through this interface, so
/// tests can substitute scripted sources to pin individual draws.
class DeviateSource {
public:
    virtual ~DeviateSource() = default;

    /// Uniform deviate on the half-open interval [0, 1).
    virtual double uniform01() = 0;

    /// Standard normal deviate N(0, 1).
    virtual double standard_normal() = 0;

    /// N(mean, sd), with sd the standard deviation.
    double gaussian(double mean, double sd) { return mean + sd * standard_normal(); }

    /// U(lo, hi) on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
};

/// Seeded deterministic stream.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Both deviates are derived here rather than through
/// <random> distributions, whose algorithms are implementation-defined.
/// A stream is single-owner and must not be shared across threads.
class RandomStream final : public DeviateSource {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    double uniform01() override;
    double standard_normal() override;

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

} // namespace rsdm
