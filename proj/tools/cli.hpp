#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gdom::cli {

/// Runs one gdom command. args excludes the program name. Returns the exit
/// status: 0 success, 1 parameter/domain/parse error, 2 resource limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gdom::cli
