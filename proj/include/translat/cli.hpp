#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace translat {

/// Command dispatcher behind the `translat` binary. Returns the process
/// exit code: 0 success, 1 domain error, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace translat
