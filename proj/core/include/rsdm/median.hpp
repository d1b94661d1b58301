#pragma once

#include <span>

namespace rsdm {

/// Sample median; an even count averages the two central order statistics.
/// Throws UsageError on empty input.
double median(std::span<const double> values);

} // namespace rsdm
