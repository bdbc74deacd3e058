#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vfcomb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Degree limits per subcommand. Beyond these the exact computations
// still work but take longer than an interactive tool should.
inline constexpr int kMaxCountDegree = 5000;
inline constexpr int kMaxDimensionDegree = 300;
inline constexpr int kMaxTypeDegree = 80;
inline constexpr int kMaxEnumerateDegree = 16;
inline constexpr int kMaxRenderDegree = 200;
inline constexpr int kMaxPolyaDegree = 300;
inline constexpr int kMaxAsymptoticsDegree = 400;

/// Runs one command line (without the program name). Data goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfcomb::cli
