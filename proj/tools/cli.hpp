#pragma once

#include <iosfwd>

namespace optbwtrl::cli {

// exit statuses
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;
inline constexpr int exit_bad_index = 4;
inline constexpr int exit_internal = 5;
inline constexpr int exit_bad_input = 6;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace optbwtrl::cli
