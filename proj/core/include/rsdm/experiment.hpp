#pragma once

#include "rsdm/evolution.hpp"
#include "rsdm/objectives.hpp"
#include "rsdm/variant.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace rsdm {

/// Generational settings shared by every run of an experiment.
struct RunSettings {
    std::size_t survivors = 20;
    std::size_t progeny_per_survivor = 9;
    std::size_t max_generations = 50;
    double convergence_threshold = 1e-8;
    double sigma0_fraction = 0.1;
};

/// Replicated runs of several variants on one objective. Replicate r of
/// every variant uses seed base_seed + r, so variants are compared on
/// paired seeds.
struct ExperimentSpec {
    Objective objective;
    std::vector<VariantConfig> variants;
    std::size_t replicates = 10;
    std::uint64_t base_seed = 0;
    RunSettings settings;

    /// RunConfig for one (variant, replicate) pair.
    RunConfig run_config(const VariantConfig& variant, std::size_t replicate) const;
};

/// Generation-wise median of best fitness across replicates.
struct MedianCurve {
    std::string variant;
    std::vector<double> values;
};

struct VariantResult {
    MedianCurve median;
    std::vector<ConvergenceCurve> runs;
};

struct ExperimentResult {
    std::string objective;
    std::vector<VariantResult> variants;
};

/// Extends a series to `length` by repeating its last value.
std::vector<double> carry_forward(const std::vector<double>& series, std::size_t length);

/// Pointwise median of carry-forward padded curves. Length is
/// 1 + the longest run.
MedianCurve median_curve(std::string label, const std::vector<ConvergenceCurve>& runs);

/// Throws UsageError on an empty variant list or zero replicates.
ExperimentResult run_experiment(const ExperimentSpec& spec);

struct CsvPaths {
    std::filesystem::path median;
    std::filesystem::path runs;
};

/// Writes <objective>_median.csv (generation,<variant>...) and
/// <objective>_runs.csv (variant,replicate,generation,best_fitness) into
/// `dir`, creating it if needed. Numbers use shortest round-trip form.
CsvPaths emit_csv(const ExperimentResult& result, const std::filesystem::path& dir);

/// One row of the final-fitness table.
struct SummaryRow {
    std::string function;
    std::vector<std::pair<std::string, double>> cells;
};

/// Final median of each variant.
SummaryRow summarize(const ExperimentResult& result);

/// Plain-text table: one row per function, one column per variant label,
/// cells in 2-significant-digit scientific notation ("0" for exact zero).
std::string emit_summary(const std::vector<SummaryRow>& rows);

/// Shortest decimal string that parses back to the same double.
std::string format_round_trip(double value);

/// 2-significant-digit scientific notation, or "0".
std::string format_summary_cell(double value);

} // namespace rsdm
