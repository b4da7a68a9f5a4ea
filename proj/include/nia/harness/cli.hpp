#pragma once

#include <filesystem>
#include <iosfwd>

namespace nia::harness {

/// Exit status: 0 success, 1 runtime error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Resolves a relative output path against $NIA_OUT_DIR when it is set.
std::filesystem::path resolve_output(const std::filesystem::path& path);

}  // namespace nia::harness
