#pragma once

#include "lsx/types.hpp"

namespace lsx::cli {

inline constexpr const char* kVersion = lsx::kVersion;
inline constexpr const char* kConfigEnvVar = "LSX_CONFIG";

/// Entry point shared by the binary and the tests. Returns the exit code;
/// never throws (errors become a one-line diagnostic on stderr and a
/// nonzero code).
int run(int argc, const char* const* argv);

}  // namespace lsx::cli
