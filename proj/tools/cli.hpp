#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace comono::cli {

enum class Command { curve, decompose, lift, sample, verify, demo };

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsage = 2, kIoOrParse = 3 };

struct RunConfig {
    Command command = Command::demo;
    std::optional<std::filesystem::path> input;
    std::optional<std::filesystem::path> output;
    std::optional<std::filesystem::path> law;
    int stages = 4;
    std::size_t samples = 0;
    std::uint64_t seed = 42;
    double tolerance = 1e-9;
    std::optional<double> x;
    std::optional<double> y;
};

/// Bad command line. exit_code() is 0 when help was requested (message holds the help text).
class UsageError : public std::runtime_error {
  public:
    UsageError(const std::string& message, int exit_code = kUsage)
        : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

  private:
    int exit_code_;
};

/// args excludes the program name.
RunConfig parse_args(const std::vector<std::string>& args);

/// Executes one command. Data goes to `out` (or the --output file), diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace comono::cli
