#pragma once

#include "oasislab/core.hpp"

#include <iosfwd>

namespace oasislab {

/// Runs the cross-module invariant suite for one base, printing one line per
/// check. Returns true when every check passes.
bool verify_base(Base b, int threads, std::ostream& out);

} // namespace oasislab
