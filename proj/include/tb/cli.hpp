#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tb::cli {

/// Runs one `tb` command.  Returns 0 on success, 1 on a domain error and 2 on
/// a usage error; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tb::cli
