#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vmstar {

// Exit codes: 0 yes/success, 1 certified negative, 2 unknown or budget
// exhausted, 3 usage error, 4 internal failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vmstar
