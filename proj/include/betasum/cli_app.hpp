#ifndef BETASUM_CLI_APP_HPP
#define BETASUM_CLI_APP_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace betasum::cli {

/// Resolved command-line configuration; defaults match the documented CLI.
struct RunConfig {
    unsigned n_max = 50;
    unsigned m_max = 3;
    double tolerance = 1e-9;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    unsigned instances = 20;
    std::optional<std::string> out_path;
    bool strict_paper = false;
};

/// Parses argv and runs the selected command. Exit status contract:
/// 0 when every counted check passes (paper-form misprint failures are
/// reported but not counted unless --strict-paper), 1 when any counted
/// check fails, 2 on usage errors (unknown flags, formats or identities).
int run(int argc, const char* const* argv);

}  // namespace betasum::cli

#endif
