#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nmotive {

/// Runs one `newton-motive` command. `args` excludes the program name.
/// Exit codes: 0 success, 1 failed check or internal error, 2 input error,
/// 3 mathematical precondition failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nmotive
