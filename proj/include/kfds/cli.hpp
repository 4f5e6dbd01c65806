#pragma once

#include <string>
#include <vector>

#include "kfds/run_config.hpp"

namespace kfds {

struct OutputSpec {
    enum class Format { Csv, Json };
    enum class What { Field, Norms, EocTable };
    std::string path;
    Format format = Format::Csv;
    What what = What::Field;
};

// Exit codes: 0 success, 2 usage/config error, 3 solver divergence, 4 I/O.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDivergence = 3;
inline constexpr int kExitIo = 4;

/// Parse CLI arguments into a run configuration + output spec. Throws
/// ConfigError on usage problems; --help and missing arguments are treated
/// as usage errors by the caller.
struct CliOptions {
    RunConfig config;
    OutputSpec output;
};

CliOptions parse_args(const std::vector<std::string>& args);

/// Execute one configured run (field run or convergence study), writing
/// artifacts and printing a one-line summary. Returns a process exit code.
int run_case(const CliOptions& options);

/// Full entry point: parse + run + error-to-exit-code mapping.
int cli_main(int argc, char** argv);

}  // namespace kfds
