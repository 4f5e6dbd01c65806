#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <optional>

#include "kfds/boundary.hpp"
#include "kfds/common.hpp"
#include "kfds/grid.hpp"
#include "kfds/solver1d.hpp"
#include "kfds/wavespeed.hpp"

namespace kfds {

// Depth threshold below which a cell counts as dry and its velocity is zeroed.
inline constexpr double kDryDepth = 1e-10;

/// 1D shallow water state (h, hu) with bed profile b(x) at cell centers.
struct SweState {
    Grid1D grid;
    ArrayXd h;
    ArrayXd hu;
    ArrayXd bed;
    double gravity = 9.81;
    double t = 0.0;

    static SweState create(const Grid1D& grid, const std::function<double(double)>& depth,
                           const std::function<double(double)>& discharge,
                           const std::function<double(double)>& bed_profile,
                           double gravity = 9.81);
};

inline double swe_velocity(double h, double hu) {
    return h < kDryDepth ? 0.0 : hu / std::max(h, 1e-12);
}

/// G(U) = (hu, hu^2/h + g h^2 / 2), with the momentum flux guarded at h -> 0.
inline std::array<double, 2> swe_physical_flux(double h, double hu, double gravity) {
    if (h < 0.0) throw StateError("swe_physical_flux: negative depth");
    const double u = swe_velocity(h, hu);
    return {hu, hu * u + 0.5 * gravity * h * h};
}

/// Momentum source -g * (h_{j+1/2}+h_{j-1/2})/2 * (b_{j+1/2}-b_{j-1/2}) / dx;
/// the continuity equation carries no source.
inline double well_balanced_source(double h_iface_minus, double h_iface_plus, double b_jump,
                                   double gravity, double dx) {
    if (h_iface_minus < 0.0 || h_iface_plus < 0.0)
        throw StateError("well_balanced_source: negative interface depth");
    return -gravity * 0.5 * (h_iface_minus + h_iface_plus) * b_jump / dx;
}

/// One explicit step with prescribed dt.
SweState swe_step_once(const SweState& state, SchemeKind scheme, const BoundaryCondition& bc,
                       WaveSpeedMode mode, double dt);

/// One step with dt from the CFL bound on the interface wave speeds.
SweState advance_swe(const SweState& state, SchemeKind scheme, const BoundaryCondition& bc,
                     WaveSpeedMode mode, double cfl,
                     std::optional<double> dt_cap = std::nullopt);

SweState run_swe_to_time(const SweState& initial, SchemeKind scheme,
                         const BoundaryCondition& bc, WaveSpeedMode mode,
                         const TimeControls& controls, RunLog* log = nullptr);

}  // namespace kfds
