#include "kfds/solver1d.hpp"

#include <string>

namespace kfds {
namespace {

// Cell diffusive fluxes g_v = nu du/dx for pad cells [width-1, width+n],
// i.e. the interior plus one ghost on each side (needed by the boundary
// interface averages). Central differences everywhere they fit; one-sided
// at the outermost non-periodic cells; index wrap for periodic runs so the
// two copies of a wrapped interface see identical values.
ArrayXd cell_diffusive_flux(const ArrayXd& u, const ArrayXd& pad, int width, double nu,
                            double dx, const BoundaryCondition& bc) {
    const int n = static_cast<int>(u.size());
    ArrayXd gv(n + 2);  // gv[c + 1] belongs to domain cell c, c in [-1, n]
    if (bc.is_periodic()) {
        auto wrap = [&](int j) { return u[(j % n + n) % n]; };
        for (int c = -1; c <= n; ++c)
            gv[c + 1] = nu * (wrap(c + 1) - wrap(c - 1)) / (2.0 * dx);
        return gv;
    }
    const int last = static_cast<int>(pad.size()) - 1;
    for (int c = -1; c <= n; ++c) {
        const int k = c + width;  // pad index of cell c
        if (k - 1 >= 0 && k + 1 <= last)
            gv[c + 1] = nu * (pad[k + 1] - pad[k - 1]) / (2.0 * dx);
        else if (k == 0)
            gv[c + 1] = nu * (pad[1] - pad[0]) / dx;
        else
            gv[c + 1] = nu * (pad[last] - pad[last - 1]) / dx;
    }
    return gv;
}

}  // namespace

ScalarField1D step_once(const ScalarField1D& field, const FluxModel& model, SchemeKind scheme,
                        const BoundaryCondition& bc, WaveSpeedMode mode, double dt) {
    validate_scheme_mode(scheme, mode);
    const int n = field.grid.n_cells;
    const int width = ghost_width(scheme);
    const double dx = field.grid.dx;
    const double ratio = dt / dx;

    const ArrayXd pad = pad_with_ghosts(field.u, bc, width);
    const int n_pad = static_cast<int>(pad.size());
    ArrayXd g_pad(n_pad);
    for (int k = 0; k < n_pad; ++k) g_pad[k] = model.g(pad[k]);

    // Interface k sits between pad cells k and k+1; domain interface
    // j-1/2 corresponds to k = j + width - 1. First-order KFDS carries the
    // global CE bound; the second-order schemes and the Hybrid fallback use
    // the pairwise bound so the anti-diffusion stays second-order accurate.
    const int n_ifaces = n_pad - 1;
    ArrayXd lam(n_ifaces);
    const bool global_ce = mode == WaveSpeedMode::CE && scheme == SchemeKind::KFDS;
    const double ce_global = global_ce ? lambda_ce(pad, model) : 0.0;
    for (int k = 0; k < n_ifaces; ++k) {
        const double ce = global_ce ? ce_global : lambda_ce_pair(pad[k], pad[k + 1], model);
        lam[k] = lambda_interface(pad[k], pad[k + 1], model, mode, ce);
    }

    ArrayXd flux(n + 1);
    for (int i = 0; i <= n; ++i) {
        const int k = i + width - 1;
        switch (scheme) {
            case SchemeKind::KFDS:
            case SchemeKind::KFDSPlus:
                flux[i] = interface_flux_kfds(pad[k], pad[k + 1], g_pad[k], g_pad[k + 1], lam[k]);
                break;
            case SchemeKind::KLW:
                flux[i] =
                    interface_flux_klw(pad[k], pad[k + 1], g_pad[k], g_pad[k + 1], lam[k], ratio);
                break;
            case SchemeKind::TVD_KFDS:
            case SchemeKind::TVD_KFDSPlus:
                flux[i] = interface_flux_tvd({pad[k - 1], pad[k], pad[k + 1], pad[k + 2]},
                                             {g_pad[k - 1], g_pad[k], g_pad[k + 1], g_pad[k + 2]},
                                             lam[k], ratio);
                break;
        }
    }

    ScalarField1D next = field;
    next.t = field.t + dt;
    for (int j = 0; j < n; ++j) next.u[j] = field.u[j] - ratio * (flux[j + 1] - flux[j]);

    if (model.nu > 0.0) {
        const ArrayXd gv = cell_diffusive_flux(field.u, pad, width, model.nu, dx, bc);
        for (int j = 0; j < n; ++j) {
            const double fv_left = viscous_interface_flux(gv[j], gv[j + 1]);
            const double fv_right = viscous_interface_flux(gv[j + 1], gv[j + 2]);
            next.u[j] += ratio * (fv_right - fv_left);
        }
    }

    for (int j = 0; j < n; ++j)
        if (!std::isfinite(next.u[j]))
            throw DivergenceError("solution diverged at cell " + std::to_string(j) + ", t = " +
                                  std::to_string(next.t));
    return next;
}

ScalarField1D advance(const ScalarField1D& field, const FluxModel& model, SchemeKind scheme,
                      const BoundaryCondition& bc, WaveSpeedMode mode, double cfl,
                      std::optional<double> dt_cap) {
    validate_scheme_mode(scheme, mode);
    const int width = ghost_width(scheme);
    const ArrayXd pad = pad_with_ghosts(field.u, bc, width);

    double lam_max = 0.0;
    if (mode == WaveSpeedMode::CE) {
        lam_max = lambda_ce(pad, model);
    } else {
        const double ce = lambda_ce(pad, model);
        for (int k = 0; k + 1 < static_cast<int>(pad.size()); ++k)
            lam_max = std::max(lam_max, lambda_interface(pad[k], pad[k + 1], model, mode, ce));
    }

    auto dt = stable_dt(lam_max, field.grid.dx, cfl, model.nu);
    if (!dt) {
        // Nothing moves; jump straight to the cap if one was given.
        ScalarField1D next = field;
        if (dt_cap) next.t = field.t + *dt_cap;
        return next;
    }
    double step = *dt;
    if (dt_cap && *dt_cap < step) step = *dt_cap;
    return step_once(field, model, scheme, bc, mode, step);
}

ScalarField1D run_to_time(const ScalarField1D& initial, const FluxModel& model,
                          SchemeKind scheme, const BoundaryCondition& bc, WaveSpeedMode mode,
                          const TimeControls& controls, RunLog* log) {
    ScalarField1D field = initial;
    RunLog local;
    RunLog& out = log ? *log : local;
    out.steps = 0;
    out.residuals.clear();

    const double t_end = controls.t_final;
    if (!controls.is_steady() && t_end <= field.t) return field;

    while (true) {
        if (out.steps >= controls.max_steps)
            throw DivergenceError("run_to_time: step cap " + std::to_string(controls.max_steps) +
                                  " exceeded");
        std::optional<double> cap;
        if (!controls.is_steady()) {
            cap = t_end - field.t;
            if (*cap <= 0.0) break;
        }
        ScalarField1D next = advance(field, model, scheme, bc, mode, controls.cfl, cap);
        const double dt = next.t - field.t;
        double residual = 0.0;
        if (dt > 0.0) residual = (next.u - field.u).abs().maxCoeff() / dt;
        out.steps += 1;
        out.residuals.push_back(residual);
        out.final_residual = residual;
        field = std::move(next);
        if (controls.is_steady()) {
            if (residual < controls.steady_tol) break;
        } else {
            // Floating accumulation can leave t a hair short of t_end.
            if (field.t >= t_end * (1.0 - 1e-15) - 1e-300) break;
        }
    }
    return field;
}

}  // namespace kfds
