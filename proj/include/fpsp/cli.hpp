#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fpsp {

/// Exit codes: 0 success, 1 an exact check failed, 2 usage, config or input error.
int dispatch(int argc, const char* const* argv);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpsp
