#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or input error,
// 2 internal error.

#include <iosfwd>
#include <string>
#include <vector>

namespace slopelab {

inline constexpr const char* tool_version = "0.3.0";

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_dispatch(int argc, char** argv);

} // namespace slopelab
