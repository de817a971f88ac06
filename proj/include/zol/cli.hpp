#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zol {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 2 on argument errors, 3 when a documented ceiling or guard refuses.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zol
