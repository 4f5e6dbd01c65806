#include "kfds/solver2d.hpp"

#include <string>

#include "kfds/swe1d.hpp"
#include "kfds/wavespeed.hpp"

namespace kfds {
namespace {

FluxModel y_model(const FluxModel& m) {
    FluxModel y;
    y.g = m.g2 ? m.g2 : [](double) { return 0.0; };
    y.a = m.a2 ? m.a2 : [](double) { return 0.0; };
    y.nu = m.nu;
    return y;
}

ArrayXd pad_line(const ArrayXd& line, BcKind lo, double lo_value, BcKind hi, double hi_value,
                 int width) {
    BoundaryCondition bc{{lo, lo_value}, {hi, hi_value}};
    return pad_with_ghosts(line, bc, width);
}

double side_value(const Bc2DSide& side, double x, double y, double t) {
    return side.value ? side.value(x, y, t) : 0.0;
}

// Padded rows (x-sweep lines) and padded columns (y-sweep lines) of a
// scalar field, ghosts filled from the 2D boundary condition.
struct PaddedScalar {
    ArrayXXd x_lines;  // (nx + 2w) x ny
    ArrayXXd y_lines;  // (ny + 2w) x nx, line per column for cache-friendly sweeps
};

PaddedScalar pad_scalar_field(const ScalarField2D& f, const BoundaryCondition2D& bc, int w) {
    const Grid2D& g = f.grid;
    PaddedScalar p;
    p.x_lines.resize(g.n_x + 2 * w, g.n_y);
    for (int j = 0; j < g.n_y; ++j) {
        const double y = g.y_center(j);
        p.x_lines.col(j) =
            pad_line(f.u.col(j), bc.left.kind, side_value(bc.left, g.x_min, y, f.t),
                     bc.right.kind, side_value(bc.right, g.x_max, y, f.t), w);
    }
    p.y_lines.resize(g.n_y + 2 * w, g.n_x);
    for (int i = 0; i < g.n_x; ++i) {
        const double x = g.x_center(i);
        p.y_lines.col(i) =
            pad_line(f.u.row(i).transpose(), bc.bottom.kind,
                     side_value(bc.bottom, x, g.y_min, f.t), bc.top.kind,
                     side_value(bc.top, x, g.y_max, f.t), w);
    }
    return p;
}

double max_abs_speed(const ArrayXXd& values, const std::function<double(double)>& a) {
    double m = 0.0;
    for (Eigen::Index k = 0; k < values.size(); ++k)
        m = std::max(m, std::abs(a(values.data()[k])));
    return m;
}

// Directional sweep over one padded line: fills n+1 interface fluxes.
void sweep_line_fluxes(const ArrayXd& pad, const FluxModel& model, SchemeKind scheme,
                       WaveSpeedMode mode, double ce_lambda, double ratio, ArrayXd& flux) {
    const int n_pad = static_cast<int>(pad.size());
    const int w = ghost_width(scheme);
    const int n = n_pad - 2 * w;
    ArrayXd g_pad(n_pad);
    for (int k = 0; k < n_pad; ++k) g_pad[k] = model.g(pad[k]);
    ArrayXd lam(n_pad - 1);
    const bool global_ce = mode == WaveSpeedMode::CE && scheme == SchemeKind::KFDS;
    for (int k = 0; k + 1 < n_pad; ++k) {
        const double ce =
            global_ce ? ce_lambda : lambda_ce_pair(pad[k], pad[k + 1], model);
        lam[k] = lambda_interface(pad[k], pad[k + 1], model, mode, ce);
    }
    flux.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        const int k = i + w - 1;
        switch (scheme) {
            case SchemeKind::KFDS:
            case SchemeKind::KFDSPlus:
                flux[i] = interface_flux_kfds(pad[k], pad[k + 1], g_pad[k], g_pad[k + 1], lam[k]);
                break;
            case SchemeKind::KLW:
                flux[i] =
                    interface_flux_klw(pad[k], pad[k + 1], g_pad[k], g_pad[k + 1], lam[k], ratio);
                break;
            default:
                flux[i] = interface_flux_tvd({pad[k - 1], pad[k], pad[k + 1], pad[k + 2]},
                                             {g_pad[k - 1], g_pad[k], g_pad[k + 1], g_pad[k + 2]},
                                             lam[k], ratio);
        }
    }
}

// Convective and diffusive rates restrict the step jointly: taking the
// smaller of two independent bounds lets their combined amplification
// exceed one (observed on the 64x64 viscous front).
std::optional<double> stable_dt_2d(double lam_x, double lam_y, double dx, double dy, double cfl,
                                   double nu) {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("stable_dt_2d: cfl must be in (0, 1]");
    if (nu == 0.0 && lam_y == 0.0 && lam_x > 0.0)
        return cfl * dx / lam_x;  // matches the 1D formula when y is inert
    if (nu == 0.0 && lam_x == 0.0 && lam_y > 0.0) return cfl * dy / lam_y;
    double rate = 0.0;
    if (lam_x > 0.0) rate += lam_x / dx;
    if (lam_y > 0.0) rate += lam_y / dy;
    if (nu > 0.0) rate += 2.0 * nu * (1.0 / (dx * dx) + 1.0 / (dy * dy));
    if (rate == 0.0) return std::nullopt;
    return cfl / rate;
}

}  // namespace

ScalarField2D scalar2d_step_once(const ScalarField2D& field, const FluxModel& model,
                                 SchemeKind scheme, const BoundaryCondition2D& bc,
                                 WaveSpeedMode mode, double dt) {
    validate_scheme_mode(scheme, mode);
    bc.validate();
    const Grid2D& g = field.grid;
    const int w = ghost_width(scheme);
    const double ratio_x = dt / g.dx, ratio_y = dt / g.dy;
    const FluxModel my = y_model(model);

    const PaddedScalar p = pad_scalar_field(field, bc, w);
    const double lam_x_flux = std::max(max_abs_speed(p.x_lines, model.a), kLambdaFloor);
    const double lam_y_flux = std::max(max_abs_speed(p.y_lines, my.a), kLambdaFloor);

    ArrayXXd flux_x(g.n_x + 1, g.n_y), flux_y(g.n_y + 1, g.n_x);
    ArrayXd line;
    for (int j = 0; j < g.n_y; ++j) {
        sweep_line_fluxes(p.x_lines.col(j), model, scheme, mode, lam_x_flux, ratio_x, line);
        flux_x.col(j) = line;
    }
    for (int i = 0; i < g.n_x; ++i) {
        sweep_line_fluxes(p.y_lines.col(i), my, scheme, mode, lam_y_flux, ratio_y, line);
        flux_y.col(i) = line;
    }

    ScalarField2D next = field;
    next.t = field.t + dt;
    for (int i = 0; i < g.n_x; ++i)
        for (int j = 0; j < g.n_y; ++j) {
            // single symmetric accumulation keeps the transpose/mirror
            // symmetries of symmetric data exact in floating point
            double v = field.u(i, j) - (ratio_x * (flux_x(i + 1, j) - flux_x(i, j)) +
                                        ratio_y * (flux_y(j + 1, i) - flux_y(j, i)));
            if (model.nu > 0.0) {
                const double lap_x = (p.x_lines(i + w + 1, j) - 2.0 * field.u(i, j) +
                                      p.x_lines(i + w - 1, j)) /
                                     (g.dx * g.dx);
                const double lap_y = (p.y_lines(j + w + 1, i) - 2.0 * field.u(i, j) +
                                      p.y_lines(j + w - 1, i)) /
                                     (g.dy * g.dy);
                v += dt * model.nu * (lap_x + lap_y);
            }
            if (!std::isfinite(v))
                throw DivergenceError("2D solution diverged at cell (" + std::to_string(i) +
                                      ", " + std::to_string(j) + "), t = " +
                                      std::to_string(next.t));
            next.u(i, j) = v;
        }
    return next;
}

ScalarField2D advance_2d_scalar(const ScalarField2D& field, const FluxModel& model,
                                SchemeKind scheme, const BoundaryCondition2D& bc,
                                WaveSpeedMode mode, double cfl, std::optional<double> dt_cap) {
    validate_scheme_mode(scheme, mode);
    bc.validate();
    const int w = ghost_width(scheme);
    const FluxModel my = y_model(model);
    const PaddedScalar p = pad_scalar_field(field, bc, w);

    double lam_x = 0.0, lam_y = 0.0;
    if (mode == WaveSpeedMode::CE) {
        lam_x = max_abs_speed(p.x_lines, model.a);
        lam_y = max_abs_speed(p.y_lines, my.a);
    } else {
        const double ce_x = std::max(max_abs_speed(p.x_lines, model.a), kLambdaFloor);
        const double ce_y = std::max(max_abs_speed(p.y_lines, my.a), kLambdaFloor);
        for (int j = 0; j < field.grid.n_y; ++j)
            for (int k = 0; k + 1 < p.x_lines.rows(); ++k)
                lam_x = std::max(lam_x, lambda_interface(p.x_lines(k, j), p.x_lines(k + 1, j),
                                                         model, mode, ce_x));
        for (int i = 0; i < field.grid.n_x; ++i)
            for (int k = 0; k + 1 < p.y_lines.rows(); ++k)
                lam_y = std::max(lam_y, lambda_interface(p.y_lines(k, i), p.y_lines(k + 1, i),
                                                         my, mode, ce_y));
    }

    auto dt = stable_dt_2d(lam_x, lam_y, field.grid.dx, field.grid.dy, cfl, model.nu);
    if (!dt) {
        ScalarField2D next = field;
        if (dt_cap) next.t = field.t + *dt_cap;
        return next;
    }
    double step = *dt;
    if (dt_cap && *dt_cap < step) step = *dt_cap;
    return scalar2d_step_once(field, model, scheme, bc, mode, step);
}

ScalarField2D run_2d_scalar_to_time(const ScalarField2D& initial, const FluxModel& model,
                                    SchemeKind scheme, const BoundaryCondition2D& bc,
                                    WaveSpeedMode mode, const TimeControls& controls,
                                    RunLog* log) {
    ScalarField2D field = initial;
    RunLog local;
    RunLog& out = log ? *log : local;
    out.steps = 0;
    out.residuals.clear();
    if (!controls.is_steady() && controls.t_final <= field.t) return field;
    while (true) {
        if (out.steps >= controls.max_steps)
            throw DivergenceError("run_2d_scalar_to_time: step cap exceeded");
        std::optional<double> cap;
        if (!controls.is_steady()) {
            cap = controls.t_final - field.t;
            if (*cap <= 0.0) break;
        }
        ScalarField2D next = advance_2d_scalar(field, model, scheme, bc, mode, controls.cfl, cap);
        const double dt = next.t - field.t;
        double residual = 0.0;
        if (dt > 0.0) residual = (next.u - field.u).abs().maxCoeff() / dt;
        out.steps += 1;
        out.residuals.push_back(residual);
        out.final_residual = residual;
        field = std::move(next);
        if (controls.is_steady()) {
            if (residual < controls.steady_tol) break;
        } else if (field.t >= controls.t_final * (1.0 - 1e-15) - 1e-300) {
            break;
        }
    }
    return field;
}

// ---------------------------------------------------------------------------
// 2D shallow water
// ---------------------------------------------------------------------------

SweField2D SweField2D::create(const Grid2D& grid,
                              const std::function<double(double, double)>& depth,
                              double gravity) {
    SweField2D f;
    f.grid = grid;
    f.gravity = gravity;
    f.h.resize(grid.n_x, grid.n_y);
    f.hu = ArrayXXd::Zero(grid.n_x, grid.n_y);
    f.hv = ArrayXXd::Zero(grid.n_x, grid.n_y);
    for (int i = 0; i < grid.n_x; ++i)
        for (int j = 0; j < grid.n_y; ++j) {
            f.h(i, j) = depth(grid.x_center(i), grid.y_center(j));
            if (f.h(i, j) < 0.0) throw StateError("SweField2D::create: negative initial depth");
        }
    return f;
}

namespace {

struct SweLine {
    ArrayXd h, mn, mt;  // depth, normal momentum, transverse momentum
};

// Pad one sweep line; reflective walls negate the normal momentum ghosts.
SweLine pad_swe_line(const ArrayXd& h, const ArrayXd& mn, const ArrayXd& mt, BcKind lo,
                     BcKind hi, int w) {
    if (lo == BcKind::Dirichlet || hi == BcKind::Dirichlet)
        throw ConfigError("dirichlet boundaries are not defined for the 2D SWE solver");
    BoundaryCondition bc{{lo, 0.0}, {hi, 0.0}};
    SweLine out{pad_with_ghosts(h, bc, w), pad_with_ghosts(mn, bc, w),
                pad_with_ghosts(mt, bc, w)};
    const int n = static_cast<int>(h.size());
    for (int k = 1; k <= w; ++k) {
        if (lo == BcKind::Reflective) out.mn[w - k] = -out.mn[w - k];
        if (hi == BcKind::Reflective) out.mn[w + n - 1 + k] = -out.mn[w + n - 1 + k];
    }
    return out;
}

struct SweLineFluxes {
    ArrayXd f_h, f_mn, f_mt;
    double lam_max = 0.0;
};

// Normal fluxes along one line: G_n = (h un, h un^2 + g h^2/2, h un ut).
SweLineFluxes sweep_swe_line(const SweLine& line, double gravity, SchemeKind scheme,
                             WaveSpeedMode mode, double ce_lambda, double ratio) {
    const int n_pad = static_cast<int>(line.h.size());
    const int w = ghost_width(scheme);
    const int n = n_pad - 2 * w;
    ArrayXd g_h(n_pad), g_mn(n_pad), g_mt(n_pad);
    for (int k = 0; k < n_pad; ++k) {
        const double un = swe_velocity(line.h[k], line.mn[k]);
        g_h[k] = line.mn[k];
        g_mn[k] = line.mn[k] * un + 0.5 * gravity * line.h[k] * line.h[k];
        g_mt[k] = line.mt[k] * un;
    }
    ArrayXd lam1(n_pad - 1), lam2(n_pad - 1), lam3(n_pad - 1);
    double lam_max = 0.0;
    for (int k = 0; k + 1 < n_pad; ++k) {
        const double ul = swe_velocity(line.h[k], line.mn[k]);
        const double ur = swe_velocity(line.h[k + 1], line.mn[k + 1]);
        const double al = std::sqrt(gravity * std::max(line.h[k], 0.0));
        const double ar = std::sqrt(gravity * std::max(line.h[k + 1], 0.0));
        bool use_rh = mode == WaveSpeedMode::RH;
        if (mode == WaveSpeedMode::Hybrid)
            use_rh = shock_indicator(ul - al, ur - ar) || shock_indicator(ul + al, ur + ar);
        if (use_rh) {
            lam1[k] = std::abs(ul - al);
            lam2[k] = std::abs(ul + al);
            lam3[k] = std::abs(ul);
        } else {
            lam1[k] = lam2[k] = lam3[k] = ce_lambda;
        }
        lam_max = std::max({lam_max, lam1[k], lam2[k], lam3[k]});
    }
    auto kernel = [&](const ArrayXd& U, const ArrayXd& G, const ArrayXd& lam, int i) {
        const int k = i + w - 1;
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
    SweLineFluxes out;
    out.f_h.resize(n + 1);
    out.f_mn.resize(n + 1);
    out.f_mt.resize(n + 1);
    out.lam_max = lam_max;
    for (int i = 0; i <= n; ++i) {
        out.f_h[i] = kernel(line.h, g_h, lam1, i);
        out.f_mn[i] = kernel(line.mn, g_mn, lam2, i);
        out.f_mt[i] = kernel(line.mt, g_mt, lam3, i);
    }
    return out;
}

// Global CE wave speed per sweep direction: max |un +- a| over all cells.
double swe_ce_lambda(const ArrayXXd& h, const ArrayXXd& mn, double gravity) {
    double m = 0.0;
    for (Eigen::Index k = 0; k < h.size(); ++k) {
        const double hv = h.data()[k];
        const double un = swe_velocity(hv, mn.data()[k]);
        const double a = std::sqrt(gravity * std::max(hv, 0.0));
        m = std::max(m, std::max(std::abs(un - a), std::abs(un + a)));
    }
    return std::max(m, kLambdaFloor);
}

}  // namespace

SweField2D swe2d_step_once(const SweField2D& field, SchemeKind scheme,
                           const BoundaryCondition2D& bc, WaveSpeedMode mode, double dt) {
    validate_scheme_mode(scheme, mode);
    bc.validate();
    const Grid2D& g = field.grid;
    const int w = ghost_width(scheme);
    const double ratio_x = dt / g.dx, ratio_y = dt / g.dy;
    const double ce_x = swe_ce_lambda(field.h, field.hu, field.gravity);
    const double ce_y = swe_ce_lambda(field.h, field.hv, field.gravity);

    ArrayXXd fx_h(g.n_x + 1, g.n_y), fx_mn(g.n_x + 1, g.n_y), fx_mt(g.n_x + 1, g.n_y);
    for (int j = 0; j < g.n_y; ++j) {
        const SweLine line = pad_swe_line(field.h.col(j), field.hu.col(j), field.hv.col(j),
                                          bc.left.kind, bc.right.kind, w);
        const SweLineFluxes f = sweep_swe_line(line, field.gravity, scheme, mode, ce_x, ratio_x);
        fx_h.col(j) = f.f_h;
        fx_mn.col(j) = f.f_mn;
        fx_mt.col(j) = f.f_mt;
    }
    ArrayXXd fy_h(g.n_y + 1, g.n_x), fy_mn(g.n_y + 1, g.n_x), fy_mt(g.n_y + 1, g.n_x);
    for (int i = 0; i < g.n_x; ++i) {
        const SweLine line =
            pad_swe_line(field.h.row(i).transpose(), field.hv.row(i).transpose(),
                         field.hu.row(i).transpose(), bc.bottom.kind, bc.top.kind, w);
        const SweLineFluxes f = sweep_swe_line(line, field.gravity, scheme, mode, ce_y, ratio_y);
        fy_h.col(i) = f.f_h;
        fy_mn.col(i) = f.f_mn;  // flux of hv along y
        fy_mt.col(i) = f.f_mt;  // flux of hu along y
    }

    SweField2D next = field;
    next.t = field.t + dt;
    for (int i = 0; i < g.n_x; ++i)
        for (int j = 0; j < g.n_y; ++j) {
            next.h(i, j) = field.h(i, j) - (ratio_x * (fx_h(i + 1, j) - fx_h(i, j)) +
                                            ratio_y * (fy_h(j + 1, i) - fy_h(j, i)));
            next.hu(i, j) = field.hu(i, j) - (ratio_x * (fx_mn(i + 1, j) - fx_mn(i, j)) +
                                              ratio_y * (fy_mt(j + 1, i) - fy_mt(j, i)));
            next.hv(i, j) = field.hv(i, j) - (ratio_x * (fx_mt(i + 1, j) - fx_mt(i, j)) +
                                              ratio_y * (fy_mn(j + 1, i) - fy_mn(j, i)));
            if (!std::isfinite(next.h(i, j)) || !std::isfinite(next.hu(i, j)) ||
                !std::isfinite(next.hv(i, j)))
                throw DivergenceError("2D SWE diverged at cell (" + std::to_string(i) + ", " +
                                      std::to_string(j) + "), t = " + std::to_string(next.t));
            if (next.h(i, j) < 0.0)
                throw DivergenceError("negative depth at cell (" + std::to_string(i) + ", " +
                                      std::to_string(j) + "), t = " + std::to_string(next.t));
        }
    return next;
}

SweField2D advance_2d_swe(const SweField2D& field, SchemeKind scheme,
                          const BoundaryCondition2D& bc, WaveSpeedMode mode, double cfl,
                          std::optional<double> dt_cap) {
    validate_scheme_mode(scheme, mode);
    bc.validate();
    const double lam_x = swe_ce_lambda(field.h, field.hu, field.gravity);
    const double lam_y = swe_ce_lambda(field.h, field.hv, field.gravity);
    auto dt = stable_dt_2d(lam_x, lam_y, field.grid.dx, field.grid.dy, cfl, 0.0);
    if (!dt) {
        SweField2D next = field;
        if (dt_cap) next.t = field.t + *dt_cap;
        return next;
    }
    double step = *dt;
    if (dt_cap && *dt_cap < step) step = *dt_cap;
    return swe2d_step_once(field, scheme, bc, mode, step);
}

SweField2D run_2d_swe_to_time(const SweField2D& initial, SchemeKind scheme,
                              const BoundaryCondition2D& bc, WaveSpeedMode mode,
                              const TimeControls& controls, RunLog* log) {
    SweField2D field = initial;
    RunLog local;
    RunLog& out = log ? *log : local;
    out.steps = 0;
    out.residuals.clear();
    if (!controls.is_steady() && controls.t_final <= field.t) return field;
    while (true) {
        if (out.steps >= controls.max_steps)
            throw DivergenceError("run_2d_swe_to_time: step cap exceeded");
        std::optional<double> cap;
        if (!controls.is_steady()) {
            cap = controls.t_final - field.t;
            if (*cap <= 0.0) break;
        }
        SweField2D next = advance_2d_swe(field, scheme, bc, mode, controls.cfl, cap);
        const double dt = next.t - field.t;
        double residual = 0.0;
        if (dt > 0.0)
            residual = std::max({(next.h - field.h).abs().maxCoeff(),
                                 (next.hu - field.hu).abs().maxCoeff(),
                                 (next.hv - field.hv).abs().maxCoeff()}) /
                       dt;
        out.steps += 1;
        out.residuals.push_back(residual);
        out.final_residual = residual;
        field = std::move(next);
        if (controls.is_steady()) {
            if (residual < controls.steady_tol) break;
        } else if (field.t >= controls.t_final * (1.0 - 1e-15) - 1e-300) {
            break;
        }
    }
    return field;
}

}  // namespace kfds
