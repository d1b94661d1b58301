#include "rsdm/median.hpp"

#include "rsdm/errors.hpp"

#include <algorithm>
#include <vector>

namespace rsdm {

double median(std::span<const double> values)
{
    if (values.empty()) {
        throw UsageError("median of an empty list");
    }
    std::vector<double> sorted(values.begin(), values.end());
    const std::size_t mid = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
    const double upper = sorted[mid];
    if (sorted.size() % 2 == 1) {
        return upper;
    }
    const double lower = *std::max_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid));
    return lower + (upper - lower) / 2.0;
}

} // namespace rsdm
