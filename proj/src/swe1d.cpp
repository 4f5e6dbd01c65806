#include "kfds/swe1d.hpp"

#include <string>

namespace kfds {
namespace {

// Ghost-pad (h, hu); reflective walls mirror the depth and negate the
// discharge. The bed is geometry and always extends by zero-order copy.
void pad_swe(const SweState& s, const BoundaryCondition& bc, int width, ArrayXd& h_pad,
             ArrayXd& hu_pad, ArrayXd& b_pad) {
    bc.validate();
    if (bc.left.kind == BcKind::Dirichlet || bc.right.kind == BcKind::Dirichlet)
        throw ConfigError("dirichlet boundaries are not defined for the SWE solver");
    h_pad = pad_with_ghosts(s.h, bc, width);
    hu_pad = pad_with_ghosts(s.hu, bc, width);
    b_pad = pad_with_ghosts(s.bed, BoundaryCondition::extrapolation(), width);
    const int n = s.grid.n_cells;
    for (int k = 1; k <= width; ++k) {
        if (bc.left.kind == BcKind::Reflective) hu_pad[width - k] = -hu_pad[width - k];
        if (bc.right.kind == BcKind::Reflective)
            hu_pad[width + n - 1 + k] = -hu_pad[width + n - 1 + k];
    }
}

}  // namespace

SweState SweState::create(const Grid1D& grid, const std::function<double(double)>& depth,
                          const std::function<double(double)>& discharge,
                          const std::function<double(double)>& bed_profile, double gravity) {
    SweState s;
    s.grid = grid;
    s.gravity = gravity;
    s.h.resize(grid.n_cells);
    s.hu.resize(grid.n_cells);
    s.bed.resize(grid.n_cells);
    for (int j = 0; j < grid.n_cells; ++j) {
        const double x = grid.center(j);
        s.bed[j] = bed_profile(x);
        s.h[j] = depth(x);
        s.hu[j] = discharge(x);
        if (s.h[j] < 0.0) throw StateError("SweState::create: negative initial depth");
    }
    return s;
}

SweState swe_step_once(const SweState& state, SchemeKind scheme, const BoundaryCondition& bc,
                       WaveSpeedMode mode, double dt) {
    const int n = state.grid.n_cells;
    const int width = ghost_width(scheme);
    const double dx = state.grid.dx;
    const double g = state.gravity;
    const double ratio = dt / dx;

    ArrayXd h_pad, hu_pad, b_pad;
    pad_swe(state, bc, width, h_pad, hu_pad, b_pad);
    const int n_pad = static_cast<int>(h_pad.size());

    ArrayXd flux_h(n_pad), flux_hu(n_pad);
    for (int k = 0; k < n_pad; ++k) {
        const auto f = swe_physical_flux(h_pad[k], hu_pad[k], g);
        flux_h[k] = f[0];
        flux_hu[k] = f[1];
    }

    const int n_ifaces = n_pad - 1;
    ArrayXd lam1(n_ifaces), lam2(n_ifaces);
    for (int k = 0; k < n_ifaces; ++k) {
        const LambdaPair lp = lambda_swe({h_pad[k], hu_pad[k]}, {h_pad[k + 1], hu_pad[k + 1]},
                                         g, mode);
        lam1[k] = lp.lambda1;
        lam2[k] = lp.lambda2;
    }

    // Per-equation interface fluxes sharing the scalar kernels.
    auto component_flux = [&](const ArrayXd& U, const ArrayXd& G, const ArrayXd& lam, int i) {
        const int k = i + width - 1;
        switch (scheme) {
            case SchemeKind::KFDS:
            case SchemeKind::KFDSPlus:
                return interface_flux_kfds(U[k], U[k + 1], G[k], G[k + 1], lam[k]);
            case SchemeKind::KLW:
                return interface_flux_klw(U[k], U[k + 1], G[k], G[k + 1], lam[k], ratio);
            default:
                return interface_flux_tvd({U[k - 1], U[k], U[k + 1], U[k + 2]},
                                          {G[k - 1], G[k], G[k + 1], G[k + 2]}, lam[k], ratio);
        }
    };

    ArrayXd f1(n + 1), f2(n + 1);
    for (int i = 0; i <= n; ++i) {
        f1[i] = component_flux(h_pad, flux_h, lam1, i);
        f2[i] = component_flux(hu_pad, flux_hu, lam2, i);
    }

    SweState next = state;
    next.t = state.t + dt;
    for (int j = 0; j < n; ++j) {
        const int k = j + width;
        const double h_minus = 0.5 * (h_pad[k - 1] + h_pad[k]);
        const double h_plus = 0.5 * (h_pad[k] + h_pad[k + 1]);
        const double b_minus = 0.5 * (b_pad[k - 1] + b_pad[k]);
        const double b_plus = 0.5 * (b_pad[k] + b_pad[k + 1]);
        const double source = well_balanced_source(h_minus, h_plus, b_plus - b_minus, g, dx);
        next.h[j] = state.h[j] - ratio * (f1[j + 1] - f1[j]);
        next.hu[j] = state.hu[j] - ratio * (f2[j + 1] - f2[j]) + dt * source;
        if (!std::isfinite(next.h[j]) || !std::isfinite(next.hu[j]))
            throw DivergenceError("SWE solution diverged at cell " + std::to_string(j) +
                                  ", t = " + std::to_string(next.t));
        if (next.h[j] < 0.0)
            throw DivergenceError("negative depth at cell " + std::to_string(j) + ", t = " +
                                  std::to_string(next.t));
    }
    return next;
}

SweState advance_swe(const SweState& state, SchemeKind scheme, const BoundaryCondition& bc,
                     WaveSpeedMode mode, double cfl, std::optional<double> dt_cap) {
    validate_scheme_mode(scheme, mode);
    const int width = ghost_width(scheme);
    ArrayXd h_pad, hu_pad, b_pad;
    pad_swe(state, bc, width, h_pad, hu_pad, b_pad);
    double lam_max = 0.0;
    for (int k = 0; k + 1 < static_cast<int>(h_pad.size()); ++k) {
        const LambdaPair lp = lambda_swe({h_pad[k], hu_pad[k]}, {h_pad[k + 1], hu_pad[k + 1]},
                                         state.gravity, mode);
        lam_max = std::max({lam_max, lp.lambda1, lp.lambda2});
    }
    auto dt = stable_dt(lam_max, state.grid.dx, cfl, 0.0);
    if (!dt) {
        SweState next = state;
        if (dt_cap) next.t = state.t + *dt_cap;
        return next;
    }
    double step = *dt;
    if (dt_cap && *dt_cap < step) step = *dt_cap;
    return swe_step_once(state, scheme, bc, mode, step);
}

SweState run_swe_to_time(const SweState& initial, SchemeKind scheme, const BoundaryCondition& bc,
                         WaveSpeedMode mode, const TimeControls& controls, RunLog* log) {
    SweState state = initial;
    RunLog local;
    RunLog& out = log ? *log : local;
    out.steps = 0;
    out.residuals.clear();

    if (!controls.is_steady() && controls.t_final <= state.t) return state;
    while (true) {
        if (out.steps >= controls.max_steps)
            throw DivergenceError("run_swe_to_time: step cap exceeded");
        std::optional<double> cap;
        if (!controls.is_steady()) {
            cap = controls.t_final - state.t;
            if (*cap <= 0.0) break;
        }
        SweState next = advance_swe(state, scheme, bc, mode, controls.cfl, cap);
        const double dt = next.t - state.t;
        double residual = 0.0;
        if (dt > 0.0)
            residual = std::max((next.h - state.h).abs().maxCoeff(),
                                (next.hu - state.hu).abs().maxCoeff()) /
                       dt;
        out.steps += 1;
        out.residuals.push_back(residual);
        out.final_residual = residual;
        state = std::move(next);
        if (controls.is_steady()) {
            if (residual < controls.steady_tol) break;
        } else if (state.t >= controls.t_final * (1.0 - 1e-15) - 1e-300) {
            break;
        }
    }
    return state;
}

}  // namespace kfds
