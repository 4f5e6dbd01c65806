#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace kfds {

using Eigen::ArrayXd;
using Eigen::ArrayXXd;

// Error categories map onto CLI exit codes (config -> 2, divergence -> 3, io -> 4).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivergenceError : std::runtime_error {
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid physical state (negative depth, non-finite input).
struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace kfds
