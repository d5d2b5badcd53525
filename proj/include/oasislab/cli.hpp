#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oasislab {

/// Dispatches the oasis-lab subcommands. Exit codes: 0 success, 2 usage
/// error, 3 overflow/capacity rejection, 4 failed verify property.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace oasislab
