#include "rsdm/experiment.hpp"

#include "rsdm/errors.hpp"
#include "rsdm/median.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsdm {

RunConfig ExperimentSpec::run_config(const VariantConfig& variant, std::size_t replicate) const
{
    RunConfig cfg;
    cfg.objective = objective;
    cfg.variant = variant;
    cfg.survivors = settings.survivors;
    cfg.progeny_per_survivor = settings.progeny_per_survivor;
    cfg.max_generations = settings.max_generations;
    cfg.convergence_threshold = settings.convergence_threshold;
    cfg.sigma0_fraction = settings.sigma0_fraction;
    cfg.seed = base_seed + replicate;
    return cfg;
}

std::vector<double> carry_forward(const std::vector<double>& series, std::size_t length)
{
    std::vector<double> out = series;
    if (!out.empty() && out.size() < length) {
        out.resize(length, out.back());
    }
    return out;
}

MedianCurve median_curve(std::string label, const std::vector<ConvergenceCurve>& runs)
{
    if (runs.empty()) {
        throw UsageError("median_curve: no runs");
    }
    std::size_t length = 0;
    for (const auto& r : runs) {
        length = std::max(length, r.best_fitness.size());
    }
    std::vector<std::vector<double>> padded;
    padded.reserve(runs.size());
    for (const auto& r : runs) {
        padded.push_back(carry_forward(r.best_fitness, length));
    }
    MedianCurve out{std::move(label), {}};
    out.values.reserve(length);
    std::vector<double> column(runs.size());
    for (std::size_t g = 0; g < length; ++g) {
        for (std::size_t r = 0; r < padded.size(); ++r) {
            column[r] = padded[r][g];
        }
        out.values.push_back(median(column));
    }
    return out;
}

ExperimentResult run_experiment(const ExperimentSpec& spec)
{
    if (spec.variants.empty()) {
        throw UsageError("run_experiment: variant set is empty");
    }
    if (spec.replicates == 0) {
        throw UsageError("run_experiment: replicates must be at least 1");
    }
    ExperimentResult result{spec.objective.name, {}};
    for (const auto& variant : spec.variants) {
        VariantResult vr;
        vr.runs.reserve(spec.replicates);
        for (std::size_t r = 0; r < spec.replicates; ++r) {
            vr.runs.push_back(run(spec.run_config(variant, r)));
        }
        vr.median = median_curve(variant_name(variant), vr.runs);
        result.variants.push_back(std::move(vr));
    }
    return result;
}

std::string format_round_trip(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

std::string format_summary_cell(double value)
{
    if (value == 0.0) {
        return "0";
    }
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.1e", value);
    return buf.data();
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << content;
    out.close();
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

} // namespace

CsvPaths emit_csv(const ExperimentResult& result, const std::filesystem::path& dir)
{
    if (result.variants.empty()) {
        throw UsageError("emit_csv: no curves to write");
    }
    std::size_t length = 0;
    for (const auto& v : result.variants) {
        length = std::max(length, v.median.values.size());
    }

    std::ostringstream median_csv;
    median_csv << "generation";
    std::vector<std::vector<double>> columns;
    for (const auto& v : result.variants) {
        median_csv << ',' << v.median.variant;
        columns.push_back(carry_forward(v.median.values, length));
    }
    median_csv << '\n';
    for (std::size_t g = 0; g < length; ++g) {
        median_csv << g;
        for (const auto& col : columns) {
            median_csv << ',' << format_round_trip(col[g]);
        }
        median_csv << '\n';
    }

    std::ostringstream runs_csv;
    runs_csv << "variant,replicate,generation,best_fitness\n";
    for (const auto& v : result.variants) {
        for (std::size_t r = 0; r < v.runs.size(); ++r) {
            const auto& best = v.runs[r].best_fitness;
            for (std::size_t g = 0; g < best.size(); ++g) {
                runs_csv << v.median.variant << ',' << r << ',' << g << ',' << format_round_trip(best[g])
                         << '\n';
            }
        }
    }

    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
    }
    CsvPaths paths{dir / (result.objective + "_median.csv"), dir / (result.objective + "_runs.csv")};
    write_file(paths.median, median_csv.str());
    write_file(paths.runs, runs_csv.str());
    return paths;
}

SummaryRow summarize(const ExperimentResult& result)
{
    SummaryRow row{result.objective, {}};
    for (const auto& v : result.variants) {
        row.cells.emplace_back(v.median.variant, v.median.values.back());
    }
    return row;
}

std::string emit_summary(const std::vector<SummaryRow>& rows)
{
    if (rows.empty()) {
        throw UsageError("emit_summary: nothing to summarize");
    }
    // columns in first-seen order across rows
    std::vector<std::string> labels;
    for (const auto& row : rows) {
        for (const auto& [label, value] : row.cells) {
            if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
                labels.push_back(label);
            }
        }
    }

    std::vector<std::vector<std::string>> table;
    table.push_back({"Function"});
    table.back().insert(table.back().end(), labels.begin(), labels.end());
    for (const auto& row : rows) {
        std::vector<std::string> line{row.function};
        for (const auto& label : labels) {
            auto it = std::find_if(row.cells.begin(), row.cells.end(),
                                   [&](const auto& cell) { return cell.first == label; });
            line.push_back(it == row.cells.end() ? "-" : format_summary_cell(it->second));
        }
        table.push_back(std::move(line));
    }

    std::vector<std::size_t> widths(labels.size() + 1, 0);
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            widths[c] = std::max(widths[c], line[c].size());
        }
    }
    std::ostringstream os;
    for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            os << line[c];
            if (c + 1 < line.size()) {
                os << std::string(widths[c] - line[c].size() + 2, ' ');
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace rsdm
