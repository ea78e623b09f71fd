#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tracegames {

/// Command-line front end. Exactly one document goes to `out`; diagnostics go
/// to `err`. Exit codes: 0 found/winning/true, 1 not-found/losing/false,
/// 2 unknown/bound-exceeded, 3 input or format error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tracegames
