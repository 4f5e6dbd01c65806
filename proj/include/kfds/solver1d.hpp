#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kfds/boundary.hpp"
#include "kfds/common.hpp"
#include "kfds/field.hpp"
#include "kfds/flux_model.hpp"
#include "kfds/wavespeed.hpp"

namespace kfds {

enum class SchemeKind { KFDS, KFDSPlus, KLW, TVD_KFDS, TVD_KFDSPlus };

inline const char* scheme_name(SchemeKind s) {
    switch (s) {
        case SchemeKind::KFDS: return "kfds";
        case SchemeKind::KFDSPlus: return "kfds+";
        case SchemeKind::KLW: return "klw";
        case SchemeKind::TVD_KFDS: return "tvd";
        case SchemeKind::TVD_KFDSPlus: return "tvd+";
    }
    return "?";
}

inline SchemeKind parse_scheme(const std::string& text) {
    if (text == "kfds") return SchemeKind::KFDS;
    if (text == "kfds+") return SchemeKind::KFDSPlus;
    if (text == "klw") return SchemeKind::KLW;
    if (text == "tvd") return SchemeKind::TVD_KFDS;
    if (text == "tvd+") return SchemeKind::TVD_KFDSPlus;
    throw ConfigError("unknown scheme '" + text + "' (expected kfds, kfds+, klw, tvd, tvd+)");
}

inline bool is_tvd(SchemeKind s) {
    return s == SchemeKind::TVD_KFDS || s == SchemeKind::TVD_KFDSPlus;
}

inline int ghost_width(SchemeKind s) { return is_tvd(s) ? 2 : 1; }

inline WaveSpeedMode default_mode(SchemeKind s) {
    return (s == SchemeKind::KFDSPlus || s == SchemeKind::TVD_KFDSPlus) ? WaveSpeedMode::RH
                                                                        : WaveSpeedMode::CE;
}

/// KFDS/KLW/TVD-KFDS run on the CE bound; the plus variants need RH or Hybrid.
inline void validate_scheme_mode(SchemeKind s, WaveSpeedMode m) {
    const bool plus = s == SchemeKind::KFDSPlus || s == SchemeKind::TVD_KFDSPlus;
    if (plus && m == WaveSpeedMode::CE)
        throw ConfigError("KFDS+/TVD-KFDS+ require wave-speed mode rh or hybrid");
    if (!plus && m != WaveSpeedMode::CE)
        throw ConfigError("KFDS/KLW/TVD-KFDS require wave-speed mode ce");
}

/// minmod limiter; ties with ab > 0 return the first argument.
inline double minmod(double a, double b) {
    if (a * b <= 0.0) return 0.0;
    return std::abs(a) <= std::abs(b) ? a : b;
}

/// First-order flux-difference-splitting interface flux.
inline double interface_flux_kfds(double u_left, double u_right, double g_left,
                                  double g_right, double lambda) {
    return 0.5 * (g_left + g_right) - 0.5 * lambda * (u_right - u_left);
}

/// Kinetic Lax-Wendroff flux; ratio = dt/dx.
inline double interface_flux_klw(double u_left, double u_right, double g_left,
                                 double g_right, double lambda, double ratio) {
    return 0.5 * (g_left + g_right) - 0.5 * lambda * lambda * ratio * (u_right - u_left);
}

/// Limited flux at j+1/2 from the stencil u_{j-1}..u_{j+2}; lambda is the
/// wave speed at j+1/2 and ratio = dt/dx.
///
/// Blends KFDS toward KLW per velocity component: the +lambda component is
/// anti-diffused against the jump at j-1/2, the -lambda component against
/// j+3/2, each limited by minmod. The jumps enter as 2 lambda df+- =
/// lambda du +- dg, so no division by lambda appears and lambda = 0 (exact
/// steady shock) simply switches the correction off. With the limiters wide
/// open the flux is exactly KLW; at opposite-sign neighbor jumps it falls
/// back to KFDS; total variation is non-increasing for Courant numbers
/// up to one.
inline double interface_flux_tvd(const std::array<double, 4>& u, const std::array<double, 4>& g,
                                 double lambda, double ratio) {
    const double plus_left = lambda * (u[1] - u[0]) + (g[1] - g[0]);
    const double plus_center = lambda * (u[2] - u[1]) + (g[2] - g[1]);
    const double minus_center = lambda * (u[2] - u[1]) - (g[2] - g[1]);
    const double minus_right = lambda * (u[3] - u[2]) - (g[3] - g[2]);
    const double base = interface_flux_kfds(u[1], u[2], g[1], g[2], lambda);
    const double coeff = 0.25 * (1.0 - lambda * ratio);  // (lambda/2)(1 - nu) per 2 lambda df
    return base + coeff * (minmod(plus_center, plus_left) + minmod(minus_center, minus_right));
}

/// Diffusive interface flux: plain average of the adjacent cell values.
inline double viscous_interface_flux(double gv_left_cell, double gv_right_cell) {
    return 0.5 * (gv_left_cell + gv_right_cell);
}

/// Stable time step; nullopt when nothing can evolve (lambda = nu = 0).
inline std::optional<double> stable_dt(double lambda_max, double dx, double cfl, double nu) {
    if (!(dx > 0.0)) throw ConfigError("stable_dt: dx must be positive");
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("stable_dt: cfl must be in (0, 1]");
    if (lambda_max < 0.0 || nu < 0.0) throw ConfigError("stable_dt: negative coefficient");
    double dt = std::numeric_limits<double>::infinity();
    if (lambda_max > 0.0) dt = cfl * dx / lambda_max;
    if (nu > 0.0) dt = std::min(dt, 0.4 * dx * dx / nu);
    if (!std::isfinite(dt)) return std::nullopt;
    return dt;
}

/// One explicit step with a prescribed dt (no stability clipping).
ScalarField1D step_once(const ScalarField1D& field, const FluxModel& model, SchemeKind scheme,
                        const BoundaryCondition& bc, WaveSpeedMode mode, double dt);

/// One step with dt from stable_dt, optionally capped (to land on t_final).
/// Returns the field unchanged when the solution cannot evolve.
ScalarField1D advance(const ScalarField1D& field, const FluxModel& model, SchemeKind scheme,
                      const BoundaryCondition& bc, WaveSpeedMode mode, double cfl,
                      std::optional<double> dt_cap = std::nullopt);

struct TimeControls {
    double cfl = 0.8;
    // NaN marches to steady state under the residual criterion instead.
    double t_final = std::numeric_limits<double>::quiet_NaN();
    double steady_tol = 1e-10;
    long max_steps = 10000000;

    bool is_steady() const { return std::isnan(t_final); }
};

struct RunLog {
    long steps = 0;
    double final_residual = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> residuals;  // max|u^{n+1}-u^n|/dt per step
};

/// Marches advance() to t_final, or to max|du|/dt < steady_tol for steady
/// cases. Throws DivergenceError past max_steps.
ScalarField1D run_to_time(const ScalarField1D& initial, const FluxModel& model,
                          SchemeKind scheme, const BoundaryCondition& bc, WaveSpeedMode mode,
                          const TimeControls& controls, RunLog* log = nullptr);

}  // namespace kfds
