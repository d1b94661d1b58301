#include "cli.hpp"

#include "rsdm/errors.hpp"
#include "rsdm/experiment.hpp"
#include "rsdm/objectives.hpp"
#include "rsdm/variant.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rsdm::cli {

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, sep)) {
        if (!part.empty()) {
            parts.push_back(part);
        }
    }
    return parts;
}

std::vector<Objective> select_objectives(const std::string& name)
{
    if (name == "all") {
        return registry();
    }
    return {find_objective(name)};
}

std::vector<VariantConfig> select_variants(const std::string& list)
{
    if (list == "all") {
        const auto all = all_variants();
        return {all.begin(), all.end()};
    }
    std::vector<VariantConfig> out;
    for (const auto& label : split(list, ',')) {
        out.push_back(parse_variant(label));
    }
    if (out.empty()) {
        throw UsageError("--variants needs at least one of MEP, MEP+RS, MEP+DM, MEP+RS+DM");
    }
    return out;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Replicated convergence experiments for self-adaptive evolutionary programming "
                 "with recorded-step and directional mutation",
                 "rsdm-bench"};

    std::string function = "all";
    std::string variants = "all";
    std::size_t replicates = 10;
    std::uint64_t seed = 1;
    RunSettings settings;
    std::string out_dir = "results";
    bool list_functions = false;

    app.add_option("--function", function, "F1, F6, F9 or all")->capture_default_str();
    app.add_option("--variants", variants, "comma list of MEP,MEP+RS,MEP+DM,MEP+RS+DM, or all")
        ->capture_default_str();
    app.add_option("--replicates", replicates, "runs per variant")->capture_default_str();
    app.add_option("--seed", seed, "base seed; replicate r uses seed + r")->capture_default_str();
    app.add_option("--generations", settings.max_generations, "generation cap")->capture_default_str();
    app.add_option("--survivors", settings.survivors, "survivors per generation")->capture_default_str();
    app.add_option("--progeny", settings.progeny_per_survivor, "children per survivor")
        ->capture_default_str();
    app.add_option("--threshold", settings.convergence_threshold,
                   "stop when best <= optimum + threshold (inf disables)")
        ->capture_default_str();
    app.add_option("--sigma0-fraction", settings.sigma0_fraction,
                   "founder sigma as a fraction of the mean init-box width")
        ->capture_default_str();
    app.add_option("--out", out_dir, "directory for the CSV files")->capture_default_str();
    app.add_flag("--list-functions", list_functions, "print the available test functions and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    if (list_functions) {
        for (const auto& obj : registry()) {
            out << obj.name << " dim=" << obj.dim << '\n';
        }
        return 0;
    }

    try {
        const auto objectives = select_objectives(function);
        const auto selected = select_variants(variants);
        if (replicates == 0) {
            throw UsageError("--replicates must be at least 1");
        }

        std::vector<SummaryRow> rows;
        for (const auto& objective : objectives) {
            ExperimentSpec spec{objective, selected, replicates, seed, settings};
            // surface bad numeric overrides as usage errors before running
            try {
                spec.run_config(selected.front(), 0).validate();
            } catch (const ConfigurationError& e) {
                throw UsageError(e.what());
            }
            const ExperimentResult result = run_experiment(spec);
            const CsvPaths paths = emit_csv(result, out_dir);
            out << "wrote " << paths.median.string() << '\n' << "wrote " << paths.runs.string() << '\n';
            rows.push_back(summarize(result));
        }
        out << '\n' << emit_summary(rows);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}

} // namespace rsdm::cli
