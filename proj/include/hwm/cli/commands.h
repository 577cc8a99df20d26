#pragma once

#include <iosfwd>

namespace hwm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

// Entry point of the hwm command line. Returns 0 on success, 2 on a
// configuration error and 1 on any other failure.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hwm
