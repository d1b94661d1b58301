#include "rsdm/objectives.hpp"

#include "rsdm/errors.hpp"

#include <cmath>
#include <numbers>

namespace rsdm {

void Objective::validate() const
{
    if (dim == 0 || !eval) {
        throw ConfigurationError("objective '" + name + "' needs a positive dimension and an evaluator");
    }
    if (init_box.size() != dim || optimum_point.size() != dim) {
        throw ConfigurationError("objective '" + name + "': init_box and optimum_point must have "
                                 + std::to_string(dim) + " entries");
    }
    for (const auto& iv : init_box) {
        if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi)) {
            throw ConfigurationError("objective '" + name + "': malformed initialization interval");
        }
    }
}

double f1(double x, double y, double z)
{
    return x * x + y * y + z * z;
}

double f6(double x, double y)
{
    using std::numbers::pi;
    return x * x + 2.0 * y * y - 0.3 * std::cos(3.0 * pi * x) - 0.4 * std::cos(4.0 * pi * y) + 0.7;
}

double f9(double x, double y)
{
    const double along = x + y;
    const double across = 100.0 * y - 100.0 * x;
    return along * along + across * across;
}

Objective objective_f1()
{
    return Objective{"F1", 3, [](const ParameterVector& v) { return f1(v[0], v[1], v[2]); },
                     std::vector<Interval>(3, Interval{-5.12, 5.12}), 0.0, ParameterVector::zeros(3)};
}

Objective objective_f6()
{
    return Objective{"F6", 2, [](const ParameterVector& v) { return f6(v[0], v[1]); },
                     std::vector<Interval>(2, Interval{-50.0, 50.0}), 0.0, ParameterVector::zeros(2)};
}

Objective objective_f9()
{
    return Objective{"F9", 2, [](const ParameterVector& v) { return f9(v[0], v[1]); },
                     std::vector<Interval>(2, Interval{-20.0, 20.0}), 0.0, ParameterVector::zeros(2)};
}

std::vector<Objective> registry()
{
    return {objective_f1(), objective_f6(), objective_f9()};
}

Objective find_objective(std::string_view name)
{
    std::string valid;
    for (auto& obj : registry()) {
        if (obj.name == name) {
            return obj;
        }
        valid += valid.empty() ? obj.name : ", " + obj.name;
    }
    throw UsageError("unknown function '" + std::string(name) + "' (valid: " + valid + ")");
}

} // namespace rsdm
