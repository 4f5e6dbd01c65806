#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "kfds/common.hpp"
#include "kfds/flux_model.hpp"

namespace kfds {

enum class WaveSpeedMode {
    CE,      // Chapman-Enskog bound: lambda = max |a(u_j)|
    RH,      // Rankine-Hugoniot jump speed per interface
    Hybrid,  // RH at interfaces with converging characteristics, CE elsewhere
};

inline const char* wave_speed_mode_name(WaveSpeedMode m) {
    switch (m) {
        case WaveSpeedMode::CE: return "ce";
        case WaveSpeedMode::RH: return "rh";
        case WaveSpeedMode::Hybrid: return "hybrid";
    }
    return "?";
}

inline WaveSpeedMode parse_wave_speed_mode(const std::string& text) {
    if (text == "ce") return WaveSpeedMode::CE;
    if (text == "rh") return WaveSpeedMode::RH;
    if (text == "hybrid") return WaveSpeedMode::Hybrid;
    throw ConfigError("unknown wave-speed mode '" + text + "' (expected ce, rh, hybrid)");
}

// Degenerate-state guard so lambda never reaches a denominator as exact zero.
inline constexpr double kLambdaFloor = 1e-12;

/// Global CE wave speed: max_j |a(u_j)| over the supplied states, floored.
inline double lambda_ce(const ArrayXd& states, const FluxModel& model) {
    if (states.size() == 0) throw ConfigError("lambda_ce: empty state array");
    double m = 0.0;
    for (Eigen::Index j = 0; j < states.size(); ++j)
        m = std::max(m, std::abs(model.a(states[j])));
    return std::max(m, kLambdaFloor);
}

/// Pointwise subcharacteristic bound at one interface: the smallest lambda
/// with lambda^2 >= a^2 on both sides. The second-order schemes use this
/// local value; the global max would add an O(1) excess diffusion that
/// costs them an order of accuracy.
inline double lambda_ce_pair(double u_left, double u_right, const FluxModel& model) {
    return std::max({std::abs(model.a(u_left)), std::abs(model.a(u_right)), kLambdaFloor});
}

/// RH wave speed |delta g / delta u|, falling back to the tangent speed
/// |a((uL+uR)/2)| when the jump is below the secant tolerance.
inline double lambda_rh(double u_left, double u_right, const FluxModel& model) {
    const double du = u_right - u_left;
    const double tol = 1e-12 * std::max({1.0, std::abs(u_left), std::abs(u_right)});
    if (std::abs(du) > tol)
        return std::abs((model.g(u_right) - model.g(u_left)) / du);
    return std::abs(model.a(0.5 * (u_left + u_right)));
}

/// Converging characteristics: a shock sits at the interface.
inline bool shock_indicator(double a_left, double a_right) {
    return a_left > 0.0 && a_right < 0.0;
}

/// Interface lambda under the given mode (scalar laws). ce_lambda is the
/// CE value the caller selected for this interface (global max for KFDS,
/// pairwise bound for the second-order schemes and the Hybrid fallback).
inline double lambda_interface(double u_left, double u_right, const FluxModel& model,
                               WaveSpeedMode mode, double ce_lambda) {
    switch (mode) {
        case WaveSpeedMode::CE: return ce_lambda;
        case WaveSpeedMode::RH: return lambda_rh(u_left, u_right, model);
        case WaveSpeedMode::Hybrid:
            return shock_indicator(model.a(u_left), model.a(u_right))
                       ? lambda_rh(u_left, u_right, model)
                       : ce_lambda;
    }
    return ce_lambda;
}

struct SweCell {
    double h = 0.0;
    double hu = 0.0;
};

struct LambdaPair {
    double lambda1 = 0.0;  // continuity equation
    double lambda2 = 0.0;  // momentum equation
};

/// Per-equation wave speeds for the 1D shallow water system. CE: both share
/// max(|u -+ a|) over the two states with a = sqrt(g h). RH: left-state
/// eigenvalue magnitudes as printed, diag(|uL - aL|, |uL + aL|).
inline LambdaPair lambda_swe(const SweCell& left, const SweCell& right, double gravity,
                             WaveSpeedMode mode) {
    if (left.h < 0.0 || right.h < 0.0) throw StateError("lambda_swe: negative depth");
    auto velocity = [](const SweCell& c) {
        return c.h < 1e-10 ? 0.0 : c.hu / std::max(c.h, 1e-12);
    };
    const double ul = velocity(left), ur = velocity(right);
    const double al = std::sqrt(gravity * left.h), ar = std::sqrt(gravity * right.h);
    if (mode == WaveSpeedMode::RH) return {std::abs(ul - al), std::abs(ul + al)};
    if (mode == WaveSpeedMode::Hybrid) {
        // Converging characteristics in either family select the RH speeds.
        if (shock_indicator(ul - al, ur - ar) || shock_indicator(ul + al, ur + ar))
            return {std::abs(ul - al), std::abs(ul + al)};
    }
    const double m = std::max(std::max(std::abs(ul - al), std::abs(ul + al)),
                              std::max(std::abs(ur - ar), std::abs(ur + ar)));
    return {m, m};
}

}  // namespace kfds
