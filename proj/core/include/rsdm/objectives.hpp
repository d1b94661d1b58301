#pragma once

#include "rsdm/individual.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rsdm {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const noexcept { return hi - lo; }
};

/// A minimization test function together with the metadata needed to start
/// and stop a run on it.
struct Objective {
    std::string name;
    std::size_t dim = 0;
    std::function<double(const ParameterVector&)> eval;
    /// One interval per coordinate; founders are drawn uniformly inside.
    std::vector<Interval> init_box;
    double optimum_value = 0.0;
    ParameterVector optimum_point;

    double operator()(const ParameterVector& x) const { return eval(x); }

    /// Throws ConfigurationError on inconsistent sizes or an empty box.
    void validate() const;
};

/// Symmetric quadratic bowl x^2 + y^2 + z^2.
double f1(double x, double y, double z);

/// Bohachevsky bowl x^2 + 2y^2 - 0.3 cos(3 pi x) - 0.4 cos(4 pi y) + 0.7.
double f6(double x, double y);

/// Narrow bowl (x + y)^2 + (100y - 100x)^2, long axis along y = x.
double f9(double x, double y);

/// F1 on [-5.12, 5.12]^3.
Objective objective_f1();
/// F6 on [-50, 50]^2.
Objective objective_f6();
/// F9 on [-20, 20]^2.
Objective objective_f9();

/// F1, F6, F9 in that order.
std::vector<Objective> registry();

/// Looks a name up in registry(). Throws UsageError listing the valid names.
Objective find_objective(std::string_view name);

} // namespace rsdm
