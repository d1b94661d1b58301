#pragma once

#include <iosfwd>

namespace rsdm::cli {

/// Entry point of rsdm-bench. Returns 0 on success, 2 on a usage error
/// and 1 on a runtime failure; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rsdm::cli
