#pragma once

#include <functional>
#include <optional>

#include "kfds/boundary.hpp"
#include "kfds/common.hpp"
#include "kfds/field.hpp"
#include "kfds/flux_model.hpp"
#include "kfds/solver1d.hpp"

namespace kfds {

/// One side of a 2D boundary; Dirichlet values may vary along the side and
/// in time: value(x, y, t) evaluated at the boundary point of the ghost line.
struct Bc2DSide {
    BcKind kind = BcKind::Extrapolation;
    std::function<double(double, double, double)> value;
};

struct BoundaryCondition2D {
    Bc2DSide left, right, bottom, top;

    static BoundaryCondition2D extrapolation() { return {}; }
    static BoundaryCondition2D periodic() {
        BoundaryCondition2D bc;
        bc.left.kind = bc.right.kind = bc.bottom.kind = bc.top.kind = BcKind::Periodic;
        return bc;
    }
    static BoundaryCondition2D reflective() {
        BoundaryCondition2D bc;
        bc.left.kind = bc.right.kind = bc.bottom.kind = bc.top.kind = BcKind::Reflective;
        return bc;
    }

    bool x_periodic() const { return left.kind == BcKind::Periodic; }
    bool y_periodic() const { return bottom.kind == BcKind::Periodic; }

    void validate() const {
        if ((left.kind == BcKind::Periodic) != (right.kind == BcKind::Periodic) ||
            (bottom.kind == BcKind::Periodic) != (top.kind == BcKind::Periodic))
            throw ConfigError("periodic BC must pair opposite sides");
        for (const Bc2DSide* s : {&left, &right, &bottom, &top})
            if (s->kind == BcKind::Dirichlet && !s->value)
                throw ConfigError("dirichlet side needs a value function");
    }
};

struct Normal2D {
    int axis = 0;  // 0 = x, 1 = y
    int sign = 1;  // outward orientation
};

/// Flux through a face with outward normal `normal`; UL is the inside state.
/// G_n = +-g1 or +-g2 per the normal; the jump term uses UR - UL as seen
/// from the inside.
inline double normal_interface_flux_2d(double u_inside, double u_outside, Normal2D normal,
                                       double lambda, const FluxModel& model) {
    if (normal.sign != 1 && normal.sign != -1)
        throw ConfigError("normal_interface_flux_2d: normal must be a unit axis vector");
    auto g_n = [&](double u) {
        const double base = normal.axis == 0 ? model.g(u) : model.g2 ? model.g2(u) : 0.0;
        return normal.sign * base;
    };
    return 0.5 * (g_n(u_inside) + g_n(u_outside)) - 0.5 * lambda * (u_outside - u_inside);
}

ScalarField2D scalar2d_step_once(const ScalarField2D& field, const FluxModel& model,
                                 SchemeKind scheme, const BoundaryCondition2D& bc,
                                 WaveSpeedMode mode, double dt);

ScalarField2D advance_2d_scalar(const ScalarField2D& field, const FluxModel& model,
                                SchemeKind scheme, const BoundaryCondition2D& bc,
                                WaveSpeedMode mode, double cfl,
                                std::optional<double> dt_cap = std::nullopt);

ScalarField2D run_2d_scalar_to_time(const ScalarField2D& initial, const FluxModel& model,
                                    SchemeKind scheme, const BoundaryCondition2D& bc,
                                    WaveSpeedMode mode, const TimeControls& controls,
                                    RunLog* log = nullptr);

/// 2D shallow water state (h, hu, hv) on a flat bed.
struct SweField2D {
    Grid2D grid;
    ArrayXXd h, hu, hv;
    double gravity = 9.81;
    double t = 0.0;

    static SweField2D create(const Grid2D& grid,
                             const std::function<double(double, double)>& depth,
                             double gravity = 9.81);
};

SweField2D swe2d_step_once(const SweField2D& field, SchemeKind scheme,
                           const BoundaryCondition2D& bc, WaveSpeedMode mode, double dt);

SweField2D advance_2d_swe(const SweField2D& field, SchemeKind scheme,
                          const BoundaryCondition2D& bc, WaveSpeedMode mode, double cfl,
                          std::optional<double> dt_cap = std::nullopt);

SweField2D run_2d_swe_to_time(const SweField2D& initial, SchemeKind scheme,
                              const BoundaryCondition2D& bc, WaveSpeedMode mode,
                              const TimeControls& controls, RunLog* log = nullptr);

}  // namespace kfds
