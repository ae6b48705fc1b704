#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geoarith::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. "-" as a path means the
/// given standard stream. Returns 0 on success or a consistent verdict, 1 on a
/// refuted verdict or failed verification, 2 on usage, parse or domain errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace geoarith::cli
